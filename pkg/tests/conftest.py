import random

from minseq.domains import IntegerRing
from minseq.genfn import discrepancy
from minseq.solver import solver_init, solver_step

Z = IntegerRing()


def forced_int_terms(rng, n, zero_rate=0.25):
    """Integer terms whose nonzero discrepancies are all +-1.

    Each new term is solved for so that the step sees the discrepancy we
    want. Scalar factors then stay units, which keeps coefficients from the
    exponential swell a generic integer run suffers, while the update work
    per step is exactly the generic-case amount.
    """
    st = solver_init(Z)
    terms = []
    for _ in range(n):
        base = discrepancy(st.mu1, st.seq.extend(0))
        lc = st.mu1.lc  # stays +-1 under this forcing
        assert lc in (1, -1)
        if rng.random() < zero_rate:
            target = 0
        else:
            target = rng.choice((1, -1))
        t = (target - base) * lc  # lc == 1/lc for units
        st = solver_step(st, t)
        assert st.last_delta == target
        terms.append(t)
    return terms
