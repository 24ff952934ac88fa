"""Coherence measures, incoherent conversions and nonlocality certificates."""

from ._core import (
    InvalidArgument,
    c_gme_converted,
    c_gme_pure,
    c_l1,
    c_rel_entropy,
    chsh_max,
    chsh_oracle,
    cnot,
    coherence_report,
    coherence_thresholds,
    convert,
    dephase,
    fanout_unitary,
    horodecki_M,
    is_incoherent_kraus,
    ns_oracle,
    pair_threshold,
    pair_witness,
    projected_chsh,
    svetlichny_lambda1,
    svetlichny_oracle,
    t_value,
    validate,
    verify,
)

__all__ = [
    "InvalidArgument",
    "c_gme_converted",
    "c_gme_pure",
    "c_l1",
    "c_rel_entropy",
    "chsh_max",
    "chsh_oracle",
    "cnot",
    "coherence_report",
    "coherence_thresholds",
    "convert",
    "dephase",
    "fanout_unitary",
    "horodecki_M",
    "is_incoherent_kraus",
    "ns_oracle",
    "pair_threshold",
    "pair_witness",
    "projected_chsh",
    "svetlichny_lambda1",
    "svetlichny_oracle",
    "t_value",
    "validate",
    "verify",
]
