import pytest

from platskein.character_module import generate_relations
from platskein.coefficients import LaurentPoly, RationalFunction
from platskein.module_quotient import ModuleQuotient, module_relations
from platskein.skein_word import SkeinElement
from platskein.trace_ring import TracePoly

LOOP = RationalFunction.from_lp(LaurentPoly({2: 1, -2: 1}))


@pytest.fixture(scope="module")
def unknot():
    rs = generate_relations("s2", 2, presentation="plain")
    return ModuleQuotient.build(rs, module_relations("s2", 2, "plain"))


def test_unknot_module_is_one_dimensional(unknot):
    assert unknot.rank == len(unknot.basis) - 1
    assert not unknot.contains(SkeinElement.basis())


@pytest.mark.parametrize("i", [1, 2])
def test_unknot_single_loops(unknot, i):
    x = TracePoly.parse("x")
    assert unknot.contains(SkeinElement.basis((i,)) + SkeinElement.scalar(x.scale(LOOP.inverse())))


def test_unknot_double_loop_is_unit(unknot):
    assert unknot.contains(SkeinElement.basis((1, 2)) - SkeinElement.basis())


def test_relations_lie_in_their_span(unknot):
    for e in module_relations("s2", 1, "plain"):
        assert unknot.contains(e)


def test_hopf_quotient_with_p1_presentation():
    # recorded behavior: the relations span the whole free module
    rs = generate_relations("s2 s2", 2)
    quotient = ModuleQuotient.build(rs, module_relations("s2 s2", 2, "p1"))
    assert quotient.rank == 4
