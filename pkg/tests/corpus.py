"""Named weight problems reused across tests."""
import numpy as np

from fusionframes.frames import Subspace
from fusionframes.weights import WeightProblem

COCO_B = np.array([[4, 1, 3], [1, 4, 2], [3, 2, 4]]) / 4.0


def coco():
    """Riesz basis of C^3 whose B matrix is COCO_B (lines with Gram sqrt(B))."""
    return WeightProblem.from_gram(np.sqrt(COCO_B))


def orthogonal_lines(n=2):
    return WeightProblem.from_unit_vectors(np.eye(n))


def orthogonal_blocks(dims):
    n = sum(dims)
    eye = np.eye(n)
    subs, start = [], 0
    for d in dims:
        subs.append(Subspace(eye[:, start:start + d]))
        start += d
    return WeightProblem(subs)


def lines_in_plane(angles):
    """Real lines in C^2 at the given angles."""
    return WeightProblem.from_unit_vectors(np.array([[np.cos(a) for a in angles],
                                                     [np.sin(a) for a in angles]]))


def two_orthogonal_pairs():
    e = np.eye(4)
    v = np.array([e[0], (e[0] + e[1]) / np.sqrt(2), e[2], (e[2] + 2 * e[3]) / np.sqrt(5)]).T
    return WeightProblem.from_unit_vectors(v)


def mixed_plane_and_line():
    """A plane and two lines in C^3."""
    e = np.eye(3)
    return WeightProblem([Subspace(e[:, :2]),
                          Subspace(((e[1] + e[2]) / np.sqrt(2))[:, None]),
                          Subspace(((e[0] + e[1] + e[2]) / np.sqrt(3))[:, None])])


def random_lines(rng, n, m):
    v = rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m))
    return WeightProblem.from_unit_vectors(v)


def small_corpus():
    """All corpus problems with m <= 3 (deterministic)."""
    rng = np.random.default_rng(7)
    probs = [
        ("coco", coco()),
        ("orthogonal lines C^2", orthogonal_lines(2)),
        ("orthogonal lines C^3", orthogonal_lines(3)),
        ("orthogonal blocks (1,2)", orthogonal_blocks([1, 2])),
        ("three lines, 60 degrees", lines_in_plane([0, np.pi / 3, 2 * np.pi / 3])),
        ("two lines, 30 degrees", lines_in_plane([0, np.pi / 6])),
        ("three lines, clustered", lines_in_plane([0, 0.1, np.pi / 2])),
        ("plane and two lines", mixed_plane_and_line()),
    ]
    for k in range(4):
        probs.append((f"random lines C^2 #{k}", random_lines(rng, 2, 3)))
        probs.append((f"random lines C^3 #{k}", random_lines(rng, 3, 3)))
    return probs
