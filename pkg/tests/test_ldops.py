import pytest

from shrinkbraid import (
    BElement,
    Cmp,
    LEAF,
    RWord,
    XLetterPresentError,
    b_circ,
    b_dot,
    circ,
    dot,
    enumerate_terms,
    eval_term,
    eval_term_b,
    laver_cmp,
    ld_circ,
    ld_dot,
    morphism_eq,
    parse_rword,
    parse_term,
    shift,
    shift_vector,
    sigma,
    x,
)
from shrinkbraid.ldops import LDTerm, TermParseError, sigma_on_braids

from conftest import random_braid


E = RWord.identity()


def random_term(rng, depth: int) -> LDTerm:
    if depth == 0 or rng.random() < 0.25:
        return LEAF
    op = dot if rng.random() < 0.5 else circ
    return op(random_term(rng, depth - 1), random_term(rng, depth - 1))


class TestWordFormulas:
    def test_dot_of_identities(self):
        assert ld_dot(E, E) == parse_rword("s1")

    def test_dot_general(self):
        assert ld_dot(parse_rword("s1"), E) == parse_rword("s1 s1 s2^-1")

    def test_dot_by_substitution_oracle(self, rng):
        from shrinkbraid import braid_inverse

        for _ in range(30):
            a, b = random_braid(rng, max_len=4), random_braid(rng, max_len=4)
            expected = a * shift(b, 1) * RWord([sigma(1)]) * shift(braid_inverse(a), 1)
            assert ld_dot(a, b) == expected

    def test_circ_of_identities(self):
        assert ld_circ(E, E) == parse_rword("x1")

    def test_circ_general(self):
        assert ld_circ(parse_rword("s2"), parse_rword("s1")) == parse_rword("s2 s2 x1")

    def test_reject_x_letters(self):
        with pytest.raises(XLetterPresentError):
            ld_dot(parse_rword("x1"), E)
        with pytest.raises(XLetterPresentError):
            ld_circ(E, parse_rword("x1"))

    def test_ld_law_instance_at_identity(self):
        lhs = ld_dot(E, ld_dot(E, E))
        rhs = ld_dot(ld_dot(E, E), ld_dot(E, E))
        assert morphism_eq(lhs, rhs)
        assert morphism_eq(lhs, parse_rword("s2 s1"))

    def test_monoid_law_instance_at_identity(self):
        assert morphism_eq(ld_circ(ld_dot(E, E), E), ld_circ(E, E))

    def test_circ_associativity_at_identity(self):
        nested_left = b_circ(b_circ(BElement(E, 1), BElement(E, 1)), BElement(E, 1))
        nested_right = b_circ(BElement(E, 1), b_circ(BElement(E, 1), BElement(E, 1)))
        assert nested_left == nested_right == BElement(E, 3)
        # e o (e o e) realizes as sh(x1) x1 = x2 x1 = x1 x1 by the pants relation.
        literal = E * shift(parse_rword("x1"), 1) * parse_rword("x1")
        assert morphism_eq(literal, nested_right.realize())


class TestBElement:
    def test_power_constraints(self):
        with pytest.raises(ValueError):
            BElement(E, 0)
        with pytest.raises(XLetterPresentError):
            BElement(parse_rword("x1"), 1)

    def test_realize(self):
        assert BElement(parse_rword("s1"), 3).realize() == parse_rword("s1 x1 x1")

    def test_b_circ_examples(self):
        assert b_circ(BElement(E, 1), BElement(E, 1)) == BElement(E, 2)
        assert b_circ(BElement(E, 2), BElement(E, 1)) == BElement(E, 3)

    def test_b_dot_example(self):
        result = b_dot(BElement(E, 2), BElement(E, 1))
        assert result.n == 1
        assert morphism_eq(result.braid, parse_rword("s2 s1"))

    def test_b_dot_on_braids_matches_ld_dot(self, rng):
        for _ in range(25):
            a, b = random_braid(rng, max_len=4), random_braid(rng, max_len=4)
            result = b_dot(BElement.from_braid(a), BElement.from_braid(b))
            assert result.n == 1
            assert morphism_eq(result.braid, ld_dot(a, b))

    def test_b_circ_matches_displayed_formula(self, rng):
        for _ in range(25):
            a = BElement(random_braid(rng, max_len=3), rng.randint(1, 3))
            c = BElement(random_braid(rng, max_len=3), rng.randint(1, 3))
            literal = a.braid * shift(c.realize(), a.n) * RWord((x(1),) * a.n)
            assert morphism_eq(b_circ(a, c).realize(), literal)

    def test_b_dot_matches_displayed_formula(self, rng):
        from shrinkbraid import braid_inverse

        for _ in range(25):
            a = BElement(random_braid(rng, max_len=3), rng.randint(1, 3))
            c = BElement(random_braid(rng, max_len=3), rng.randint(1, 3))
            n = a.n
            literal = (
                a.braid
                * shift(c.realize(), n)
                * RWord(sigma(i) for i in range(n, 0, -1))
                * shift(braid_inverse(a.braid), 1)
            )
            assert morphism_eq(b_dot(a, c).realize(), literal)


class TestEvalTerm:
    def test_leaf(self):
        assert eval_term(LEAF) == E

    def test_dot_leaf(self):
        assert eval_term(dot(LEAF, LEAF)) == parse_rword("s1")

    def test_circ_leaf(self):
        assert eval_term(circ(LEAF, LEAF)) == parse_rword("x1")

    def test_circ_power_counts_leaves(self, rng):
        for _ in range(20):
            t = random_term(rng, 3)
            element = eval_term_b(t)
            assert element.realize().x_count() == element.n - 1

    def test_equal_elements_share_circ_length(self, rng):
        # Power well-definedness: LD-monoid-law rewrites preserve the
        # x1 exponent of the realization.
        for _ in range(40):
            a, b = random_term(rng, 2), random_term(rng, 2)
            lhs = eval_term_b(circ(dot(a, b), a))
            rhs = eval_term_b(circ(a, b))
            assert morphism_eq(lhs.realize(), rhs.realize())
            assert lhs.n == rhs.n


class TestAlgebraicLaws:
    def test_ld_law(self, rng):
        for _ in range(40):
            a, b, c = (eval_term_b(random_term(rng, 3)) for _ in range(3))
            lhs = b_dot(a, b_dot(b, c))
            rhs = b_dot(b_dot(a, b), b_dot(a, c))
            assert morphism_eq(lhs.realize(), rhs.realize())

    def test_monoid_laws(self, rng):
        for _ in range(40):
            j, g, h = (eval_term_b(random_term(rng, 3)) for _ in range(3))
            pairs = [
                (b_dot(j, b_circ(g, h)), b_circ(b_dot(j, g), b_dot(j, h))),
                (b_circ(b_dot(j, h), j), b_circ(j, h)),
                (b_dot(j, b_dot(h, g)), b_dot(b_circ(j, h), g)),
            ]
            for lhs, rhs in pairs:
                assert morphism_eq(lhs.realize(), rhs.realize())

    def test_circ_associative(self, rng):
        for _ in range(40):
            a, b, c = (eval_term_b(random_term(rng, 3)) for _ in range(3))
            lhs = b_circ(a, b_circ(b, c))
            rhs = b_circ(b_circ(a, b), c)
            assert morphism_eq(lhs.realize(), rhs.realize())


class TestLaverOrder:
    def test_dot_ascends(self):
        assert laver_cmp(LEAF, dot(LEAF, LEAF)) is Cmp.LESS

    def test_circ_descends(self):
        # The representation order extends Dehornoy, which forces circle
        # products below their left factor; see the ldops module note.
        assert laver_cmp(LEAF, circ(LEAF, LEAF)) is Cmp.GREATER

    def test_reflexive(self):
        t = dot(circ(LEAF, LEAF), LEAF)
        assert laver_cmp(t, t) is Cmp.EQUAL

    def test_monotonicity(self, rng):
        for _ in range(60):
            a, b = random_term(rng, 2), random_term(rng, 2)
            assert laver_cmp(a, dot(a, b)) is Cmp.LESS
            assert laver_cmp(a, circ(a, b)) is Cmp.GREATER

    def test_linear_on_depth_two(self):
        terms = enumerate_terms(2)
        for s in terms:
            for t in terms:
                forward = laver_cmp(s, t)
                assert laver_cmp(t, s) is forward.reverse()

    def test_equal_iff_same_element(self, rng):
        for _ in range(30):
            s, t = random_term(rng, 2), random_term(rng, 2)
            same = morphism_eq(eval_term(s), eval_term(t))
            assert (laver_cmp(s, t) is Cmp.EQUAL) == same


class TestShiftVector:
    def test_examples(self):
        assert shift_vector([E, E]) == E
        assert shift_vector([parse_rword("s1"), parse_rword("s1")]) == parse_rword("s1 s2")

    def test_shift_lemma(self, rng):
        # sh(g(a)) = sh(a) g for positive braid generators acting on
        # braid sequences.
        for _ in range(40):
            n = rng.randint(2, 4)
            braids = tuple(random_braid(rng, max_len=3) for _ in range(n))
            i = rng.randint(1, n - 1)
            lhs = shift_vector(sigma_on_braids(i, braids))
            rhs = shift_vector(braids) * RWord([sigma(i)])
            assert morphism_eq(lhs, rhs)

    def test_identity_instance(self):
        assert morphism_eq(
            shift_vector(sigma_on_braids(1, (E, E))), shift_vector((E, E)) * parse_rword("s1")
        )

    def test_sigma_position_validated(self):
        with pytest.raises(IndexError):
            sigma_on_braids(2, (E, E))


class TestTermGrammar:
    def test_round_trip(self):
        text = "((j . j) o (j . (j o j)))"
        assert str(parse_term(text)) == text

    def test_leaf(self):
        assert parse_term("j") == LEAF

    @pytest.mark.parametrize("bad", ["", "(j j)", "(j .", "(j . j) extra", "k", "(j * j)"])
    def test_rejects(self, bad):
        with pytest.raises(TermParseError):
            parse_term(bad)

    def test_enumerate_counts(self):
        assert len(enumerate_terms(0)) == 1
        assert len(enumerate_terms(1)) == 3
        assert len(enumerate_terms(2)) == 19
        assert len(enumerate_terms(3)) == 723
