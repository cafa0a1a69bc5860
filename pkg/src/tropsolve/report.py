"""Kind-dispatched solve pipeline and its serializable result document."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import supertropical, symmetrized, tropical
from .errors import EmptyAfterReduction
from .linalg import Vector
from .preprocess import ReductionTrace, SystemInstance, identity_trace, reduce, require_reduced
from .semiring import Kind, parse_token


@dataclass
class SolveReportDocument:
    """Everything the ``solve`` command reports, in original 0-based coordinates.

    Vectors are held as ASCII token lists so the document round-trips exactly
    through JSON.  ``tangible_condition`` is only set for supertropical systems,
    ``rejected`` lists extended-cover candidates that failed verification.
    """

    kind: Kind
    trace: ReductionTrace
    solvable: bool
    greatest_candidate: list
    greatest_is_solution: bool
    tangible_condition: bool | None = None
    minimal_solutions: list = field(default_factory=list)
    covers: list = field(default_factory=list)
    rejected: list = field(default_factory=list)
    empty_after_reduction: bool = False

    def vectors(self, name: str) -> list[Vector]:
        """Decode a token-list field (``minimal_solutions`` or ``rejected``)."""
        return [_decode(self.kind, toks) for toks in getattr(self, name)]

    @property
    def candidate(self) -> Vector:
        return _decode(self.kind, self.greatest_candidate)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "trace": self.trace.to_dict(),
            "empty_after_reduction": self.empty_after_reduction,
            "solvable": self.solvable,
            "greatest_candidate": list(self.greatest_candidate),
            "greatest_is_solution": self.greatest_is_solution,
            "tangible_condition": self.tangible_condition,
            "minimal_solutions": [list(v) for v in self.minimal_solutions],
            "covers": [[sorted(k1), sorted(k2)] for k1, k2 in self.covers],
            "rejected": [list(v) for v in self.rejected],
        }

    @classmethod
    def from_dict(cls, d: dict) -> SolveReportDocument:
        return cls(
            kind=Kind(d["kind"]),
            trace=ReductionTrace.from_dict(d["trace"]),
            solvable=bool(d["solvable"]),
            greatest_candidate=list(d["greatest_candidate"]),
            greatest_is_solution=bool(d["greatest_is_solution"]),
            tangible_condition=d.get("tangible_condition"),
            minimal_solutions=[list(v) for v in d.get("minimal_solutions", [])],
            covers=[(frozenset(k1), frozenset(k2)) for k1, k2 in d.get("covers", [])],
            rejected=[list(v) for v in d.get("rejected", [])],
            empty_after_reduction=bool(d.get("empty_after_reduction", False)),
        )

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=True, **kw)

    @classmethod
    def from_json(cls, text: str) -> SolveReportDocument:
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        """Human-readable rendering with the usual glyphs."""
        def show(toks):
            return str(_decode(self.kind, toks))

        t = self.trace
        lines = [
            f"semiring: {self.kind.value}  ({t.shape[0]}x{t.shape[1]})",
            f"deleted rows: {sorted(t.deleted_rows)}  forced-zero vars: {sorted(t.forced_zero_vars)}"
            f"  free vars: {sorted(t.free_vars)}",
        ]
        if self.empty_after_reduction:
            lines.append("every equation reads 0 = 0 after reduction")
        lines.append(f"greatest candidate: {show(self.greatest_candidate)}"
                     f"  (solution: {_yn(self.greatest_is_solution)})")
        if self.tangible_condition is not None:
            lines.append(f"tangible condition: {_yn(self.tangible_condition)}")
        lines.append(f"solvable: {_yn(self.solvable)}")
        lines.append(f"minimal solutions: {len(self.minimal_solutions)}")
        for toks, (k1, k2) in zip(self.minimal_solutions, self.covers):
            lines.append(f"  {show(toks)}   K'={sorted(k1)} K''={sorted(k2)}")
        if self.rejected:
            lines.append(f"rejected candidates: {len(self.rejected)}")
            lines += [f"  {show(toks)}" for toks in self.rejected]
        return "\n".join(lines) + "\n"


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _decode(kind: Kind, toks) -> Vector:
    return Vector(kind, tuple(parse_token(kind, t) for t in toks))


def _empty_document(sys: SystemInstance, trace: ReductionTrace) -> SolveReportDocument:
    # No equations left: the zero vector solves, and it is the only minimal solution.
    zero = Vector.zeros(sys.kind, sys.n).tokens()
    return SolveReportDocument(
        kind=sys.kind, trace=trace, solvable=True,
        greatest_candidate=zero, greatest_is_solution=True,
        tangible_condition=True if sys.kind is Kind.SUP else None,
        minimal_solutions=[zero], covers=[(frozenset(), frozenset())],
        empty_after_reduction=True,
    )


def solve_system(sys: SystemInstance, reduce_first: bool = True) -> SolveReportDocument:
    """Reduce, solve with the kind's solver, and lift the results back.

    With ``reduce_first=False`` the system must already be reduced.
    """
    if reduce_first:
        try:
            work, trace = reduce(sys)
        except EmptyAfterReduction as exc:
            return _empty_document(sys, exc.trace)
    else:
        require_reduced(sys)
        work, trace = sys, identity_trace(sys)

    def lift(v: Vector) -> list:
        return trace.expand(v).tokens()

    def lift_cover(k1, k2):
        return trace.expand_indices(k1), trace.expand_indices(k2)

    if work.kind is Kind.TROP:
        rep = tropical.solve(work.A, work.b)
        return SolveReportDocument(
            kind=Kind.TROP, trace=trace, solvable=rep.solvable,
            greatest_candidate=lift(rep.xbar), greatest_is_solution=rep.solvable,
            minimal_solutions=[lift(v) for v in rep.minimal_solutions],
            covers=[lift_cover(K, ()) for K in rep.minimal_covers],
        )
    if work.kind is Kind.SYM:
        rep = symmetrized.minimal_modulus_solutions(work)
        return SolveReportDocument(
            kind=Kind.SYM, trace=trace, solvable=rep.solvable,
            greatest_candidate=lift(rep.xbar_sym), greatest_is_solution=rep.solvable,
            minimal_solutions=[lift(v) for v in rep.minimal_solutions],
            covers=[lift_cover(*c) for c in rep.trace],
            rejected=[lift(v) for v in rep.violations],
        )
    rep = supertropical.minimal_modulus_solutions(work)
    return SolveReportDocument(
        kind=Kind.SUP, trace=trace, solvable=rep.solvable,
        greatest_candidate=lift(rep.xbar_sup), greatest_is_solution=rep.xbar_sup_is_solution,
        tangible_condition=rep.tangible_condition,
        minimal_solutions=[lift(v) for v in rep.minimal_solutions],
        covers=[lift_cover(*c) for c in rep.trace],
        rejected=[lift(v) for v in rep.rejected],
    )
