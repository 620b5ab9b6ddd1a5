import numpy as np

from sklearn.cluster import kmeans_plusplus

DEFAULT_KMEANS_ITERS = 20


def normalize_rows(vectors: np.ndarray) -> np.ndarray:
    norms = np.linalg.norm(vectors, axis=1, keepdims=True)
    return vectors / np.where(norms == 0, 1.0, norms)


def kmeans_train(vectors, nlist: int, iters: int = DEFAULT_KMEANS_ITERS, seed: int = 0) -> np.ndarray:
    """
    Spherical k-means: k-means++ seeding (squared Euclidean on unit rows is
    2 - 2cos), cosine assignment, normalized-mean update.
    Cells left empty are re-seeded with the points farthest from their centroid.
    @return: [nlist, dim] float32 unit centroids
    """
    vectors = normalize_rows(np.asarray(vectors, dtype=np.float64))
    n = vectors.shape[0]
    if nlist < 1:
        raise ValueError(f"nlist must be >= 1, got {nlist}")
    if n < nlist:
        raise ValueError(f"k-means sample of {n} vectors is smaller than nlist={nlist}")

    centroids, _ = kmeans_plusplus(vectors, nlist, random_state=seed)

    for _ in range(iters):
        sims = vectors @ centroids.T
        assign = np.argmax(sims, axis=1)
        sums = np.zeros_like(centroids)
        np.add.at(sums, assign, vectors)
        norms = np.linalg.norm(sums, axis=1)

        empty = np.flatnonzero(norms == 0)
        if len(empty):
            closeness = sims[np.arange(n), assign]
            farthest = np.argsort(closeness, kind="stable")
            for cell, idx in zip(empty, farthest):
                sums[cell] = vectors[idx]
                norms[cell] = np.linalg.norm(vectors[idx])

        centroids = sums / norms[:, None]

    return centroids.astype(np.float32)
