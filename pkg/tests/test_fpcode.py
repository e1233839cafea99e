import itertools

import pytest

from thetaforge.fpcode import (
    Code, MonomialTransform, apply_monomial, code_predicates, code_to_text,
    doubly_even, dual_code, make_code, min_distance, parse_code_text,
    standard_codes, weight_enumerator, word_profile, zero_code,
)


def test_make_code_from_generators_spans():
    c = make_code(3, 4, generators=[(1, 0, 1, 2), (0, 1, 1, 1)])
    assert len(c) == 9 and c.dimension == 2
    # the parametric description: all (s, a, a+s, a+2s)
    expected = {(s, a, (a + s) % 3, (a + 2 * s) % 3)
                for s in range(3) for a in range(3)}
    assert c.word_set == expected


def test_make_code_detects_linearity_of_word_lists():
    words = [(s, a, (a + s) % 3, (a + 2 * s) % 3)
             for s in range(3) for a in range(3)]
    c = make_code(3, 4, words=words)
    assert c.is_linear and c.dimension == 2


def test_make_code_nonlinear_words():
    c = make_code(3, 2, words=[(0, 0), (1, 0), (2, 0), (0, 1)])
    assert not c.is_linear
    assert min_distance(c) == 1


def test_make_code_rejects_bad_input():
    with pytest.raises(ValueError):
        make_code(4, 2, words=[(0, 0)])
    with pytest.raises(ValueError):
        make_code(3, 2, words=[(0, 0)], generators=[(1, 0)])
    with pytest.raises(ValueError):
        make_code(3, 2, words=[(0, 0, 0)])
    with pytest.raises(ValueError):
        make_code(3, 2)


def test_spec_style_generators_give_equivalent_tetracode():
    # a differently signed generator pair spans a monomially equivalent code
    other = make_code(3, 4, generators=[(0, 1, 1, 2), (1, 0, 1, 1)])
    tetra = standard_codes("tetracode")
    assert len(other) == 9
    assert code_predicates(other)["self_dual"]
    assert weight_enumerator(other) == weight_enumerator(tetra)
    g = MonomialTransform(3, sigma=(0, 1, 2, 3), scalars=(1, 1, 1, 2))
    assert apply_monomial(other, g) == tetra


def test_dual_is_involution_and_dimensions_add():
    for gens, p, n in [
        ([(1, 0, 1, 2)], 3, 4),
        ([(1, 1, 0, 0), (0, 0, 1, 1)], 2, 4),
        ([(1, 2, 3, 4, 0)], 5, 5),
    ]:
        c = make_code(p, n, generators=gens)
        d = dual_code(c)
        assert d.dimension + c.dimension == n
        assert dual_code(d) == c


def test_dual_of_zero_code_is_everything():
    z = zero_code(3, 2)
    d = dual_code(z)
    assert len(d) == 9
    assert dual_code(d) == z


def test_dual_requires_linearity():
    c = make_code(3, 2, words=[(0, 0), (1, 1), (2, 0)])
    with pytest.raises(ValueError):
        dual_code(c)


def test_word_profile_symmetrizes_signs():
    assert word_profile((0, 1, 2, 1), 3) == (1, 3)
    assert word_profile((0, 1, 2, 3, 4), 5) == (1, 2, 2)
    assert word_profile((1, 0, 1), 2) == (1, 2)


def test_tetracode_facts():
    t = standard_codes("tetracode")
    preds = code_predicates(t)
    assert preds["self_dual"] and preds["self_orthogonal"]
    assert preds["min_distance"] == 3
    w = weight_enumerator(t)
    assert w.coefficients == {(4, 0): 1, (1, 3): 8}
    assert w.mass() == len(t) == 9


def test_hamming8_facts():
    h = standard_codes("hamming8")
    preds = code_predicates(h)
    assert preds["self_dual"] and preds["doubly_even"]
    assert preds["min_distance"] == 4
    w = weight_enumerator(h)
    assert w.coefficients == {(8, 0): 1, (4, 4): 14, (0, 8): 1}


def test_golay12_facts():
    g = standard_codes("golay12")
    assert len(g) == 729 and g.dimension == 6
    preds = code_predicates(g)
    assert preds["self_dual"]
    assert preds["min_distance"] == 6
    w = weight_enumerator(g)
    assert w.coefficients == {(12, 0): 1, (6, 6): 264, (3, 9): 440,
                              (0, 12): 24}


def test_standard_codes_rejects_unknown():
    with pytest.raises(ValueError):
        standard_codes("golay24")


def test_doubly_even_is_binary_only():
    with pytest.raises(ValueError):
        doubly_even(standard_codes("tetracode"))


def test_enumerator_mass_and_monomial_invariance():
    t = standard_codes("tetracode")
    g = MonomialTransform(3, sigma=(2, 0, 3, 1), scalars=(1, 2, 2, 1))
    image = apply_monomial(t, g)
    assert weight_enumerator(image) == weight_enumerator(t)
    assert weight_enumerator(image).mass() == len(t)


def test_monomial_composition_law():
    p, n = 5, 4
    words = [(1, 2, 3, 4), (0, 0, 1, 0), (4, 4, 0, 2)]
    c = make_code(p, n, words=words)
    g = MonomialTransform(p, (1, 3, 0, 2), (2, 1, 4, 3))
    h = MonomialTransform(p, (3, 2, 1, 0), (1, 1, 2, 2))
    two_step = apply_monomial(apply_monomial(c, g), h)
    assert two_step == apply_monomial(c, h.compose(g))
    for w in words:
        assert h.apply_word(g.apply_word(w)) == h.compose(g).apply_word(w)


def test_monomial_validation():
    with pytest.raises(ValueError):
        MonomialTransform(3, (0, 0), (1, 1))
    with pytest.raises(ValueError):
        MonomialTransform(3, (0, 1), (1, 3))   # 3 = 0 mod 3 is not a unit


def test_code_file_round_trip():
    t = standard_codes("tetracode")
    text = code_to_text(t)
    back = parse_code_text(text)
    assert back == t and back.is_linear


def test_code_file_comments_and_errors():
    c = parse_code_text("# header\n3 2\n0 0  # zero\n1 2\n")
    assert c.word_set == {(0, 0), (1, 2)}
    with pytest.raises(ValueError):
        parse_code_text("3\n0 0\n")
    with pytest.raises(ValueError):
        parse_code_text("3 2\n")
    with pytest.raises(ValueError):
        parse_code_text("3 2\n0 0 0\n")


def test_duality_of_enumerator_mass_bound():
    # |C| * |dual C| = p^n for linear codes
    for name, p, n in [("tetracode", 3, 4), ("hamming8", 2, 8)]:
        c = standard_codes(name)
        assert len(c) * len(dual_code(c)) == p ** n
