"""Classical illumination with a split thermal beam attains its own bound.

A thermal beam split in two gives a signal/reference pair with classical
intensity correlations.  Reading out the cross correlation (equivalently, a
photon-number difference after recombining on a 50:50 splitter) reaches the
pair's quantum Chernoff bound, and approaches the coherent-probe bound as
the reference brightness grows.
"""

from gillum import (
    ReceiverKind,
    ReceiverSpec,
    ScenarioParams,
    SourceKind,
    coherent_qcb_closed,
    hypothesis_pair,
    qcb,
    snr_cct,
    snr_generic,
)

M = 10**7

print(f"{'kappa':>8} {'cross-corr SNR':>15} {'pair QCB':>10} {'gap':>7}")
for kappa in (0.001, 0.003, 0.01, 0.03, 0.1):
    p = ScenarioParams(kappa=kappa, n_s=1.0, n_i=1.0, n_b=30.0, m_modes=M)
    snr = snr_cct(p).snr
    bound = qcb(hypothesis_pair(SourceKind.CCT, p), M).exponent
    print(f"{kappa:8.3f} {snr:15.2f} {bound:10.2f} {abs(snr/bound-1):7.2%}")

print("\nthe photon-number-difference receiver is the same measurement:")
p = ScenarioParams(kappa=0.01, n_s=1.0, n_i=1.0, n_b=30.0, m_modes=M)
pair = hypothesis_pair(SourceKind.CCT, p)
pndm = snr_generic(ReceiverSpec(ReceiverKind.PNDM), pair, M).snr
print(f"  cross correlation: {snr_cct(p).snr:.6f}   number difference: {pndm:.6f}")

print(f"\n{'N_I':>8} {'SNR':>10} {'coherent bound':>15}")
for ni in (0.5, 1.0, 5.0, 50.0, 500.0):
    p = ScenarioParams(kappa=0.01, n_s=1.0, n_i=ni, n_b=30.0, m_modes=M)
    print(f"{ni:8.1f} {snr_cct(p).snr:10.2f} "
          f"{coherent_qcb_closed(p).exponent:15.2f}")
print("\na brighter reference buys more correlation; in the strong-reference")
print("limit the split-thermal receiver approaches the coherent-probe bound.")
