import numpy as np
import pytest

from clustering import ParentDictionary, compute_centroid, select_parent
from lexicon import EmbeddingMatrix, TermTable

VUK_TABLE = TermTable(("Vergi Usul Kanunu", "VUK", "Vergi Usul K.", "Vergi Usul Yasası"))


def test_dictionary_member_wins():
    # VUK sits closest to the centroid, but the dictionary entry takes precedence
    matrix = EmbeddingMatrix(np.array([[1.0, 0.8, 0.0], [1.0, 0.0, 0.0], [1.0, 0.0, 0.3], [1.0, -0.3, 0.0]]))
    dictionary = ParentDictionary({"Vergi Usul Kanunu", "Türk Ticaret Kanunu"})
    assert select_parent({0, 1, 2, 3}, dictionary, matrix, VUK_TABLE) == 0
    assert select_parent({0, 1, 2, 3}, ParentDictionary(), matrix, VUK_TABLE) == 1


def test_several_dictionary_members_fall_back_to_centroid():
    matrix = EmbeddingMatrix(np.array([[1.0, 0.9, 0.0], [1.0, 0.0, 0.0], [1.0, 0.1, 0.0], [1.0, -0.2, 0.0]]))
    dictionary = ParentDictionary({"Vergi Usul Kanunu", "Vergi Usul K."})
    assert select_parent({0, 1, 2, 3}, dictionary, matrix, VUK_TABLE) == 2


def test_identical_rows_pick_smallest_id():
    table = TermTable(("a", "b", "c"))
    matrix = EmbeddingMatrix(np.ones((3, 4)))
    assert select_parent({2, 0, 1}, ParentDictionary(), matrix, table) == 0


def test_matches_brute_force_argmax():
    rng = np.random.default_rng(3)
    table = TermTable(tuple(f"t{i}" for i in range(3)))
    for _ in range(20):
        vectors = rng.normal(size=(3, 5))
        matrix = EmbeddingMatrix(vectors)
        mean = matrix.data.astype(np.float64).mean(axis=0)
        scores = matrix.data.astype(np.float64) @ (mean / np.linalg.norm(mean))
        assert select_parent({0, 1, 2}, ParentDictionary(), matrix, table) == int(np.argmax(scores))


def test_cancelling_members_use_pairwise_cosine():
    table = TermTable(("a", "b"))
    matrix = EmbeddingMatrix(np.array([[1.0, 0.0], [-1.0, 0.0]]))
    assert select_parent({0, 1}, ParentDictionary(), matrix, table) == 0


def test_compute_centroid():
    matrix = EmbeddingMatrix(np.array([[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0]]))
    np.testing.assert_allclose(compute_centroid({0}, matrix), [1.0, 0.0])
    np.testing.assert_allclose(compute_centroid({0, 1}, matrix), [0.70710678, 0.70710678], rtol=1e-6)
    with pytest.raises(ValueError, match="zero-norm"):
        compute_centroid({0, 2}, matrix)


def test_parent_needs_two_members():
    with pytest.raises(ValueError):
        select_parent({0}, ParentDictionary(), EmbeddingMatrix(np.eye(2)), TermTable(("a", "b")))


def test_dictionary_file(tmp_path):
    path = tmp_path / "dictionary.txt"
    path.write_text("Vergi Usul Kanunu\n", encoding="utf-8")
    dictionary = ParentDictionary.from_file(path)
    assert "Vergi Usul Kanunu" in dictionary and len(dictionary) == 1
