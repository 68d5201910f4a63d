"""
Boolean-matrix backend.

Relations are held as scipy CSR matrices with 0/1 entries; composition is a
sparse matrix product thresholded at zero, tensor is the Kronecker product.
"""

import numpy as np
from scipy import sparse


def dense(graph, n, m):
    """Dense ``n×m`` bool array with the pairs of ``graph`` set."""
    mat = np.zeros((n, m), dtype=bool)
    if graph:
        rows, cols = zip(*graph)
        mat[list(rows), list(cols)] = True
    return mat


def from_graph(graph, n, m):
    k = len(graph)
    rows = np.fromiter((i for i, _ in graph), dtype=np.int64, count=k)
    cols = np.fromiter((j for _, j in graph), dtype=np.int64, count=k)
    data = np.ones(k, dtype=np.int32)
    return sparse.csr_matrix((data, (rows, cols)), shape=(n, m))


def to_graph(mat):
    rows, cols = sparse.csr_matrix(mat).nonzero()
    return frozenset(zip(rows.tolist(), cols.tolist()))


def compose(f, g):
    out = (f @ g).tocsr()
    out.data = (out.data > 0).astype(np.int32)
    out.eliminate_zeros()
    return out


def tensor(f, g):
    return sparse.kron(f, g, format="csr")


def dagger(f):
    return f.T.tocsr()
