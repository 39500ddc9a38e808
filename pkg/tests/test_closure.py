import pytest

from pbsg import (
    GeneratorSet,
    LimitExceeded,
    PartialBijection,
    close,
    evaluate_word,
    member,
)

from conftest import pb, seeded_generator_sets


def ref_closure(gens):
    """Naive fixpoint oracle: multiply sets until nothing new appears."""
    current = set(gens)
    while True:
        new = {a * g for a in current for g in gens} - current
        if not new:
            return current
        current |= new


class TestGeneratorSet:
    def test_requires_generators(self):
        with pytest.raises(ValueError):
            GeneratorSet(2, ())

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            GeneratorSet(2, (pb("1 2 3"),))

    def test_inverse_closed_flag_is_checked(self):
        with pytest.raises(ValueError):
            GeneratorSet(2, (pb("2 _"),), inverse_closed=True)
        GeneratorSet(2, (pb("2 _"), pb("_ 1")), inverse_closed=True)

    def test_with_inverses(self):
        g = GeneratorSet.from_elements([pb("2 _")]).with_inverses()
        assert g.inverse_closed
        assert [x.to_text() for x in g.generators] == ["2 _", "_ 1"]
        # already closed: unchanged, self-inverse elements not duplicated
        h = GeneratorSet.from_elements([pb("2 1")]).with_inverses()
        assert [x.to_text() for x in h.generators] == ["2 1"]
        assert h.with_inverses() is h

    def test_json_round_trip(self):
        g = GeneratorSet(2, (pb("2 _"), pb("_ 1")), inverse_closed=True)
        obj = g.to_json_obj()
        assert obj == {
            "degree": 2,
            "generators": [[2, None], [None, 1]],
            "inverse_closed": True,
        }
        assert GeneratorSet.from_json_obj(obj) == g

    def test_json_errors(self):
        with pytest.raises(ValueError):
            GeneratorSet.from_json_obj({"degree": 2, "generators": []})
        with pytest.raises(ValueError):
            GeneratorSet.from_json_obj({"degree": 2})


class TestClose:
    def test_identity_alone(self):
        clo = close(GeneratorSet.from_elements([PartialBijection.identity(2)]))
        assert list(clo) == [PartialBijection.identity(2)]

    def test_swap_generates_group_of_two(self):
        gens = GeneratorSet.from_elements([pb("2 1")])
        clo = close(gens)
        assert set(clo) == ref_closure(gens.generators)
        assert len(clo) == 2
        assert clo.words == [(0,), (0, 0)]

    def test_shift_generates_pair(self):
        gens = GeneratorSet.from_elements([pb("2 _")])
        clo = close(gens)
        assert set(clo) == ref_closure(gens.generators) == {pb("2 _"), pb("_ _")}

    def test_matches_reference_on_random_sets(self):
        for gens in seeded_generator_sets(101, 25, degrees=(2, 3, 4)):
            clo = close(gens)
            assert set(clo) == ref_closure(gens.generators)

    def test_witnesses_evaluate_to_their_elements(self):
        for gens in seeded_generator_sets(102, 25, degrees=(2, 3, 4)):
            clo = close(gens)
            for el, word in zip(clo.elements, clo.words):
                assert evaluate_word(gens, word) == el

    def test_witness_lengths_nondecreasing(self):
        for gens in seeded_generator_sets(103, 10, degrees=(3, 4)):
            lengths = [len(w) for w in close(gens).words]
            assert lengths == sorted(lengths)

    def test_cayley_edges(self):
        for gens in seeded_generator_sets(104, 10, degrees=(2, 3)):
            clo = close(gens)
            for i, el in enumerate(clo.elements):
                for gi, g in enumerate(gens.generators):
                    assert clo.elements[clo.cayley[i][gi]] == el * g

    def test_closing_the_closure_adds_nothing(self):
        for gens in seeded_generator_sets(105, 10, degrees=(2, 3)):
            clo = close(gens)
            again = close(GeneratorSet.from_elements(clo.elements))
            assert set(again) == set(clo)

    def test_deterministic(self):
        gens = seeded_generator_sets(106, 1, degrees=(4,))[0]
        a, b = close(gens), close(gens)
        assert a.elements == b.elements and a.words == b.words and a.cayley == b.cayley

    def test_limit_exceeded(self):
        gens = GeneratorSet.from_elements([pb("2 1")])
        with pytest.raises(LimitExceeded):
            close(gens, limit=1)
        assert len(close(gens, limit=2)) == 2

    def test_inverse_closed_closure_is_inverse_closed(self):
        for gens in seeded_generator_sets(107, 10, degrees=(2, 3), inverse_closed=True):
            clo = close(gens)
            els = set(clo)
            assert all(e.inverse() in els for e in els)

    def test_duplicate_generators_deduplicated(self):
        clo = close(GeneratorSet.from_elements([pb("2 1"), pb("2 1")]))
        assert len(clo) == 2


class TestMember:
    def test_generator_is_found_immediately(self):
        gens = GeneratorSet.from_elements([pb("2 _"), pb("1 _")])
        res = member(gens, pb("1 _"))
        assert res.found and res.witness == (1,)

    def test_identity_not_generated_by_shift(self):
        gens = GeneratorSet.from_elements([pb("2 _")])
        assert member(gens, PartialBijection.identity(2)) == member(gens, pb("1 2"))
        assert not member(gens, pb("1 2")).found

    def test_swap_reaches_identity(self):
        res = member(GeneratorSet.from_elements([pb("2 1")]), PartialBijection.identity(2))
        assert res.found and res.witness == (0, 0)

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            member(GeneratorSet.from_elements([pb("2 1")]), pb("1 2 3"))

    def test_agrees_with_closure(self):
        from pbsg import all_partial_bijections

        for gens in seeded_generator_sets(108, 8, degrees=(3,)):
            els = set(close(gens))
            for b in all_partial_bijections(3):
                res = member(gens, b)
                assert res.found == (b in els)
                if res.found:
                    assert evaluate_word(gens, res.witness) == b

    def test_positive_answer_can_beat_the_limit(self):
        gens = GeneratorSet.from_elements([pb("2 3 4 5 1"), pb("1 2 3 4 5")])
        assert member(gens, pb("1 2 3 4 5"), limit=2).found


def test_evaluate_word_rejects_empty():
    with pytest.raises(ValueError):
        evaluate_word(GeneratorSet.from_elements([pb("1")]), ())
