"""
Pydantic wire models for germ-lab results

Each model mirrors one domain type. from_domain builds the model (derived
checks such as residuals are included for the reader), to_domain rebuilds the
domain value from the primary fields only.
"""

from typing import List, Optional, Tuple

from pydantic import BaseModel, Field
from sympy.combinatorics import Permutation

from ..core.blowup import BlowupStep, Resolution, ResolutionGraph, SbarRecord
from ..core.chains import CenteredChain, WeightedChain
from ..core.diophantine import AuxSol, DecoratedOrbit, DioSol4, ExtSol8
from ..core.monodromy import GermClass, GermFamily, MonodromyDatum, cycle_notation
from ..core.pairs_tree import EdgeLabel, Orbit
from ..pipeline.suites import Failure, VerifyReport


class OrbitModel(BaseModel):
    k1: int = Field(..., description="Larger component")
    k2: int = Field(..., description="Smaller component")
    level: int = Field(0, description="Tree level; {1,1} is level 1")

    @classmethod
    def from_domain(cls, o: Orbit) -> "OrbitModel":
        return cls(k1=o.k1, k2=o.k2, level=o.level)

    def to_domain(self) -> Orbit:
        return Orbit(self.k1, self.k2)


class DioSol4Model(BaseModel):
    k1: int
    k2: int
    q1: int
    q2: int
    residual: int = Field(0, description="k1*k2 - k1*q2 - k2*q1")
    in_dp: bool = Field(False, description="Solution with 0 <= q_i < k_i")

    @classmethod
    def from_domain(cls, s: DioSol4) -> "DioSol4Model":
        return cls(k1=s.k1, k2=s.k2, q1=s.q1, q2=s.q2, residual=s.residual, in_dp=s.in_dp)

    def to_domain(self) -> DioSol4:
        return DioSol4(self.k1, self.k2, self.q1, self.q2)


class DecoratedOrbitModel(BaseModel):
    k1: int
    q1: int
    k2: int
    q2: int
    label: str = Field("", description="{k1/q1,k2/q2}")

    @classmethod
    def from_domain(cls, o: DecoratedOrbit) -> "DecoratedOrbitModel":
        return cls(k1=o.k1, q1=o.q1, k2=o.k2, q2=o.q2, label=str(o))

    def to_domain(self) -> DecoratedOrbit:
        return DecoratedOrbit(self.k1, self.q1, self.k2, self.q2)


class AuxSolModel(BaseModel):
    base: DioSol4Model
    a1: int
    a2: int
    residual: int = 0

    @classmethod
    def from_domain(cls, aux: AuxSol) -> "AuxSolModel":
        return cls(base=DioSol4Model.from_domain(aux.base), a1=aux.a1, a2=aux.a2, residual=aux.residual)

    def to_domain(self) -> AuxSol:
        return AuxSol(self.base.to_domain(), self.a1, self.a2)


class ExtSol8Model(BaseModel):
    k1: int
    k2: int
    q1: int
    q2: int
    q3: int
    q4: int
    m1: int
    m2: int
    violations: List[str] = Field(default_factory=list, description="Equations or bounds that fail")

    @classmethod
    def from_domain(cls, e: ExtSol8) -> "ExtSol8Model":
        return cls(
            k1=e.k1, k2=e.k2, q1=e.q1, q2=e.q2, q3=e.q3, q4=e.q4, m1=e.m1, m2=e.m2,
            violations=e.violations(),
        )

    def to_domain(self) -> ExtSol8:
        return ExtSol8(self.k1, self.k2, self.q1, self.q2, self.q3, self.q4, self.m1, self.m2)


class WeightedChainModel(BaseModel):
    weights: List[int]
    continuant: int = 0

    @classmethod
    def from_domain(cls, c: WeightedChain) -> "WeightedChainModel":
        return cls(weights=list(c.weights), continuant=c.d)

    def to_domain(self) -> WeightedChain:
        return WeightedChain(tuple(self.weights))


class CenteredChainModel(BaseModel):
    left: List[int]
    center_weight: int
    right: List[int]
    weights: List[int] = Field(default_factory=list, description="Full chain, left to right")
    center_index: int = Field(0, description="0-based position of the center")

    @classmethod
    def from_domain(cls, c: CenteredChain) -> "CenteredChainModel":
        return cls(
            left=list(c.left.weights),
            center_weight=c.center_weight,
            right=list(c.right.weights),
            weights=list(c.weights),
            center_index=c.center_index,
        )

    def to_domain(self) -> CenteredChain:
        return CenteredChain(WeightedChain(tuple(self.left)), self.center_weight, WeightedChain(tuple(self.right)))


class SbarModel(BaseModel):
    dlt0: int
    drt0: int
    dlt1: int
    drt1: int

    @classmethod
    def from_domain(cls, s: SbarRecord) -> "SbarModel":
        return cls(dlt0=s.dlt0, drt0=s.drt0, dlt1=s.dlt1, drt1=s.drt1)

    def to_domain(self) -> SbarRecord:
        return SbarRecord(self.dlt0, self.drt0, self.dlt1, self.drt1)


class BlowupStepModel(BaseModel):
    index: int
    before: Tuple[int, int]
    after: Optional[Tuple[int, int]] = None
    label: Optional[EdgeLabel] = None
    swapped: bool = False
    created: int
    through: List[int] = Field(default_factory=list)

    @classmethod
    def from_domain(cls, s: BlowupStep) -> "BlowupStepModel":
        return cls(
            index=s.index,
            before=s.before,
            after=s.after,
            label=s.label,
            swapped=s.swapped,
            created=s.created,
            through=list(s.through),
        )

    def to_domain(self) -> BlowupStep:
        return BlowupStep(
            self.index, self.before, self.after, self.label, self.swapped, self.created, tuple(self.through)
        )


class ResolutionModel(BaseModel):
    k1: int
    k2: int
    chain: CenteredChainModel
    component_ids: List[int]
    sbar: SbarModel
    trace: List[BlowupStepModel] = Field(default_factory=list)
    blowups: int = 0
    multiplicity: int = 0

    @classmethod
    def from_domain(cls, r: Resolution) -> "ResolutionModel":
        return cls(
            k1=r.k1,
            k2=r.k2,
            chain=CenteredChainModel.from_domain(r.graph.chain),
            component_ids=list(r.graph.component_ids),
            sbar=SbarModel.from_domain(r.sbar),
            trace=[BlowupStepModel.from_domain(s) for s in r.trace],
            blowups=r.blowups,
            multiplicity=r.multiplicity,
        )

    def to_domain(self) -> Resolution:
        graph = ResolutionGraph(self.chain.to_domain(), tuple(self.component_ids))
        return Resolution(
            self.k1, self.k2, graph, self.sbar.to_domain(), tuple(s.to_domain() for s in self.trace)
        )


class PermutationModel(BaseModel):
    array_form: List[int] = Field(..., description="Images of 0..d-1")
    cycles: str = Field("", description="1-based cycle notation")

    @classmethod
    def from_domain(cls, p: Permutation) -> "PermutationModel":
        return cls(array_form=list(p.array_form), cycles=cycle_notation(p))

    def to_domain(self) -> Permutation:
        return Permutation(self.array_form)


class MonodromyDatumModel(BaseModel):
    a: PermutationModel
    t: PermutationModel
    b: PermutationModel
    degree: int = 0

    @classmethod
    def from_domain(cls, m: MonodromyDatum) -> "MonodromyDatumModel":
        return cls(
            a=PermutationModel.from_domain(m.a),
            t=PermutationModel.from_domain(m.t),
            b=PermutationModel.from_domain(m.b),
            degree=m.degree,
        )

    def to_domain(self) -> MonodromyDatum:
        return MonodromyDatum(self.a.to_domain(), self.t.to_domain(), self.b.to_domain())


class GermClassModel(BaseModel):
    k1: int
    k2: int
    family: GermFamily
    degree: int = Field(..., description="Degree of the germ; 0 when no family applies")
    mu: int = Field(..., description="Multiplicity min(k1, k2) of the branch germ")
    class_count: int = Field(..., description="Conjugacy classes of smooth admissible data")
    expected_count: int
    cross_checked: bool = Field(..., description="False when the degree is above the enumeration cap")
    witness: Optional[MonodromyDatumModel] = None
    subcase: Optional[str] = None
    params: dict = Field(default_factory=dict)

    @classmethod
    def from_domain(cls, g: GermClass) -> "GermClassModel":
        return cls(
            k1=g.k1,
            k2=g.k2,
            family=g.family,
            degree=g.degree,
            mu=g.mu,
            class_count=g.class_count,
            expected_count=g.expected_count,
            cross_checked=g.cross_checked,
            witness=MonodromyDatumModel.from_domain(g.witness) if g.witness is not None else None,
            subcase=g.subcase,
            params=dict(g.params),
        )

    def to_domain(self) -> GermClass:
        return GermClass(
            self.k1,
            self.k2,
            self.family,
            self.degree,
            self.mu,
            self.class_count,
            self.expected_count,
            self.cross_checked,
            self.witness.to_domain() if self.witness is not None else None,
            self.subcase,
            {str(k): int(v) for k, v in self.params.items()},
        )


class FailureModel(BaseModel):
    case: str
    inputs: str
    expected: str
    actual: str

    @classmethod
    def from_domain(cls, f: Failure) -> "FailureModel":
        return cls(case=f.case, inputs=f.inputs, expected=f.expected, actual=f.actual)

    def to_domain(self) -> Failure:
        return Failure(self.case, self.inputs, self.expected, self.actual)


class VerifyReportModel(BaseModel):
    suite: str
    bound: int
    cases: int
    failures: List[FailureModel] = Field(default_factory=list)
    wall_time_s: float = 0.0
    ok: bool = True

    @classmethod
    def from_domain(cls, r: VerifyReport) -> "VerifyReportModel":
        return cls(
            suite=r.suite,
            bound=r.bound,
            cases=r.cases,
            failures=[FailureModel.from_domain(f) for f in r.failures],
            wall_time_s=r.wall_time_s,
            ok=r.ok,
        )

    def to_domain(self) -> VerifyReport:
        return VerifyReport(
            self.suite, self.bound, self.cases, [f.to_domain() for f in self.failures], self.wall_time_s
        )
