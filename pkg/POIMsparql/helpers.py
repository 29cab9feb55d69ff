from multiprocessing import Pool
from functools import partial


def read_text(file):
    with open(file, "rb") as f:
        return f.read().decode("utf-8")


def parallelize(func, iterable, n_workers, **kwargs):
    f = partial(func, **kwargs)
    if n_workers > 1:
        with Pool(n_workers) as p:
            results = p.map(f, iterable)
    else:
        results = list(map(f, iterable))
    return results


def canonical_rows(rows):
    return sorted(rows, key=lambda row: tuple(term.sort_key() for term in row))
