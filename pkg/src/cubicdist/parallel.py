"""Ordered process-pool map; ``jobs <= 1`` runs inline."""

from concurrent.futures import ProcessPoolExecutor


def pmap(fn, items, jobs=1):
    items = list(items)
    if jobs is None or jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # executor.map yields in submission order, so reductions stay deterministic
        return list(pool.map(fn, items))


def chunks(seq, n):
    n = max(1, n)
    size = -(-len(seq) // n)
    return [seq[i:i + size] for i in range(0, len(seq), size)]
