"""Streaming construction of minimal solutions.

The state carries a minimal solution mu = (mu1, mu2) for the terms consumed
so far, the auxiliary pair muP from just before the last degree jump, the
last nonzero discrepancy deltaP, the branch counter e = k + 1 - 2*|mu1|, and
the nonzero scalar nabla with mu2*muP1 - mu1*muP2 = nabla.

Steps are pure: solver_step returns a fresh state and never mutates its
input, so partial states can be retained (the continued-fraction prefix
mode does exactly that).

mul_count tallies domain multiplications the way the cost bounds are stated:
one per coefficient slot touched by a scalar product (zero slots included,
i.e. dense), one per division, nothing for additions. Discrepancies cost
|mu1| + 1 each; an update costs the coefficient length of every polynomial
actually rescaled, which is where the normalised variant saves a factor.
"""

from typing import NamedTuple, Optional

from .domains import Domain, parse_domain, require_field
from .errors import InvariantViolation, MinseqError
from .genfn import Seq, SolutionPair, discrepancy
from .poly import Poly

TRIVIAL = "Trivial"
PSEUDO_GEOMETRIC = "PseudoGeometric"
ESSENTIAL = "Essential"


class SeqClass(NamedTuple):
    tag: str
    n_prime: Optional[int]


class SolverState:
    __slots__ = (
        "dom",
        "seq",
        "mu1",
        "mu2",
        "mup1",
        "mup2",
        "deltaP",
        "e",
        "nabla",
        "profile",
        "mul_count",
        "normalized",
        "with_numerator",
        "last_delta",
    )

    @property
    def k(self):
        """Number of terms consumed."""
        return len(self.seq)

    @property
    def lc(self):
        return len(self.mu1.coeffs) - 1

    @property
    def mu(self):
        return SolutionPair(self.mu1, self.mu2)

    @property
    def muP(self):
        return SolutionPair(self.mup1, self.mup2)

    def _copy(self):
        new = SolverState.__new__(SolverState)
        for name in SolverState.__slots__:
            setattr(new, name, getattr(self, name))
        return new

    def __repr__(self):
        return (
            f"SolverState(k={self.k}, mu1={self.mu1}, mu2={self.mu2}, "
            f"e={self.e}, nabla={self.dom.format(self.nabla)})"
        )


def _as_domain(spec):
    if isinstance(spec, Domain):
        return spec
    return parse_domain(spec)


def solver_init(spec, normalized=False, with_numerator=True, massey=False):
    """Fresh state: mu = (1, 0), muP = (0, -1), deltaP = 1, e = 1, nabla = 1.

    massey=True switches the auxiliary pair to (1, 0); the first nonzero
    discrepancy then produces mu1 = x^n - s_v instead of (x^n, s_v).
    """
    dom = _as_domain(spec)
    if normalized:
        require_field(dom)
    st = SolverState.__new__(SolverState)
    st.dom = dom
    st.seq = Seq(dom, [])
    st.mu1 = Poly.one(dom)
    st.mu2 = Poly.zero(dom) if with_numerator else None
    if massey:
        st.mup1 = Poly.one(dom)
        st.mup2 = Poly.zero(dom) if with_numerator else None
    else:
        st.mup1 = Poly.zero(dom)
        st.mup2 = (
            Poly(dom, [dom.neg(dom.one)]) if with_numerator else None
        )
    st.deltaP = dom.one
    st.e = 1
    st.nabla = dom.one
    st.profile = ()
    st.mul_count = 0
    st.normalized = normalized
    st.with_numerator = with_numerator
    st.last_delta = None
    return st


def solver_init_massey(spec, normalized=False, with_numerator=True):
    return solver_init(
        spec, normalized=normalized, with_numerator=with_numerator, massey=True
    )


def solver_step(state, next_term):
    """Consume one term and return the new state.

    Branching: on a nonzero discrepancy, e <= 0 rewrites mu in place
    (degree preserved); e >= 1 jumps, swapping mu into muP. The counter e
    increments unconditionally at the end, including on zero discrepancies.
    """
    dom = state.dom
    new = state._copy()
    new.seq = state.seq.extend(next_term)
    mu1 = state.mu1
    delta = discrepancy(mu1, new.seq)
    new.last_delta = delta
    muls = len(mu1.coeffs)  # |mu1| + 1 products for the discrepancy

    if delta != dom.zero:
        e = state.e
        mup1, mup2 = state.mup1, state.mup2
        if state.normalized:
            rho = dom.mul(delta, dom.inv(state.deltaP))
            muls += 1  # one division
            muls += len(mup1.coeffs)
            if e <= 0:
                new.mu1 = mu1 - mup1.scale(rho).shift(-e)
                if state.with_numerator:
                    new.mu2 = state.mu2 - mup2.scale(rho).shift(-e)
                    muls += len(mup2.coeffs)
            else:
                new.mu1 = mu1.shift(e) - mup1.scale(rho)
                if state.with_numerator:
                    new.mu2 = state.mu2.shift(e) - mup2.scale(rho)
                    muls += len(mup2.coeffs)
                new.mup1, new.mup2 = mu1, state.mu2
                new.deltaP = delta
                new.e = -e
        else:
            dp = state.deltaP
            muls += len(mu1.coeffs) + len(mup1.coeffs)
            if e <= 0:
                new.mu1 = mu1.scale(dp) - mup1.scale(delta).shift(-e)
                if state.with_numerator:
                    new.mu2 = state.mu2.scale(dp) - mup2.scale(delta).shift(-e)
                    muls += len(state.mu2.coeffs) + len(mup2.coeffs)
            else:
                new.mu1 = mu1.shift(e).scale(dp) - mup1.scale(delta)
                if state.with_numerator:
                    new.mu2 = state.mu2.shift(e).scale(dp) - mup2.scale(delta)
                    muls += len(state.mu2.coeffs) + len(mup2.coeffs)
                new.mup1, new.mup2 = mu1, state.mu2
                new.deltaP = delta
                new.e = -e
        new.nabla = dom.mul(new.deltaP, state.nabla)
        muls += 1

    new.e += 1
    lc = new.mu1.degree
    new.profile = state.profile + (lc,)
    new.mul_count = state.mul_count + muls
    if new.e != new.k + 1 - 2 * lc:
        raise InvariantViolation(
            f"e = {new.e} but k + 1 - 2|mu1| = {new.k + 1 - 2 * lc}"
        )
    return new


def minimal_solution(s, with_numerator=True, massey=False):
    """Fold solver_step over the whole sequence."""
    if len(s) < 1:
        raise MinseqError("need at least one term")
    st = solver_init(s.dom, with_numerator=with_numerator, massey=massey)
    for t in s.terms:
        st = solver_step(st, t)
    return st


def minimal_solution_normalized(s, with_numerator=True, massey=False):
    """Field-only variant keeping mu1 monic at every step."""
    if len(s) < 1:
        raise MinseqError("need at least one term")
    st = solver_init(
        s.dom, normalized=True, with_numerator=with_numerator, massey=massey
    )
    for t in s.terms:
        st = solver_step(st, t)
    return st


def lc_profile(s):
    """LC(s_0...s_{1-k}) for k = 1..n."""
    if len(s) == 0:
        return []
    st = minimal_solution(s, with_numerator=False)
    return list(st.profile)


def classify_profile(profile):
    """Trivial / pseudo-geometric / essential from an LC profile."""
    n = len(profile)
    if n == 0 or profile[-1] == 0:
        return SeqClass(TRIVIAL, None)
    if all(v == 1 for v in profile):
        return SeqClass(PSEUDO_GEOMETRIC, None)
    lc_n = profile[-1]
    n_prime = max(j for j in range(1, n) if profile[j - 1] < lc_n)
    return SeqClass(ESSENTIAL, n_prime)


def classify(s):
    return classify_profile(lc_profile(s))
