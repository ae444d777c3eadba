import sys
import os
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))
"""
Tests for the pydantic wire models
"""

import json

from germlab.core.blowup import resolve
from germlab.core.chains import hj_expand, orbit_chain
from germlab.core.diophantine import DioSol4, extend_to_8, pr_inverse, solve_aux
from germlab.core.monodromy import classify
from germlab.core.pairs_tree import Orbit
from germlab.output.schemas import (
    AuxSolModel, CenteredChainModel, DecoratedOrbitModel, DioSol4Model,
    ExtSol8Model, GermClassModel, OrbitModel, ResolutionModel,
    VerifyReportModel, WeightedChainModel,
)
from germlab.pipeline.suites import Failure, VerifyReport


def through_json(model):
    return type(model).model_validate_json(model.model_dump_json())


class TestArithmeticModels:
    """Test models for orbits and Diophantine solutions"""

    def test_orbit(self):
        model = OrbitModel.from_domain(Orbit(5, 3))
        assert model.level == 4
        assert through_json(model).to_domain() == Orbit(5, 3)

    def test_solution_carries_checks(self):
        model = DioSol4Model.from_domain(DioSol4(5, 3, 3, 1))
        assert model.residual == 1
        assert model.in_dp
        assert through_json(model).to_domain() == DioSol4(5, 3, 3, 1)

    def test_decorated_label(self):
        model = DecoratedOrbitModel.from_domain(pr_inverse(Orbit(8, 3)))
        assert model.label == "{8/5,3/1}"
        assert through_json(model).to_domain() == pr_inverse(Orbit(8, 3))

    def test_aux_and_extension(self):
        s = DioSol4(5, 3, 3, 1)
        aux = AuxSolModel.from_domain(solve_aux(s))
        assert aux.residual == 0
        assert through_json(aux).to_domain() == solve_aux(s)
        ext = ExtSol8Model.from_domain(extend_to_8(s))
        assert ext.violations == []
        assert through_json(ext).to_domain() == extend_to_8(s)


class TestChainModels:
    """Test chain and resolution models"""

    def test_weighted_chain(self):
        model = WeightedChainModel.from_domain(hj_expand(7, 3))
        assert model.weights == [3, 2, 2]
        assert model.continuant == 7

    def test_centered_chain(self):
        cc = orbit_chain(pr_inverse(Orbit(5, 3)))
        model = CenteredChainModel.from_domain(cc)
        assert model.center_index == 2
        assert through_json(model).to_domain() == cc

    def test_resolution(self):
        res = resolve(5, 3)
        model = ResolutionModel.from_domain(res)
        data = json.loads(model.model_dump_json())
        assert data["sbar"] == {"dlt0": 5, "drt0": 3, "dlt1": 3, "drt1": 1}
        assert data["trace"][0]["label"] == "E2"
        assert data["trace"][-1]["label"] is None
        assert through_json(model).to_domain() == res


class TestClassificationModels:
    """Test germ class and report models"""

    def test_germ_class(self):
        g = classify(6, 5)
        model = GermClassModel.from_domain(g)
        data = json.loads(model.model_dump_json())
        assert data["family"] == "O"
        assert data["witness"]["degree"] == 5
        back = through_json(model).to_domain()
        assert back.witness == g.witness
        assert back.params == {"a": 3, "b": 2}

    def test_report(self):
        report = VerifyReport("thm0-3", 10, 4, [Failure("thm0-3/extend", "(5,3,3,1)", "[]", "['eq2']")], 0.5)
        model = VerifyReportModel.from_domain(report)
        assert not model.ok
        back = through_json(model).to_domain()
        assert back == report
