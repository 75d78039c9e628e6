"""Independent reference implementations used as test oracles.

Everything here is written the slow, obviously-correct way so the fast
library code can be checked against it.
"""

from itertools import combinations

from hypothesis import strategies as st

from fibperm.perms import standardize


def naive_contains(perm: tuple, pattern: tuple) -> bool:
    """Test containment by standardizing every subsequence."""
    k = len(pattern)
    if k > len(perm):
        return False
    return any(
        standardize(sub) == pattern for sub in combinations(perm, k)
    )


def naive_avoids_all(perm: tuple, patterns) -> bool:
    return not any(naive_contains(perm, p) for p in patterns)


_FIB_PATTERNS = ((2, 3, 1), (3, 1, 2), (3, 2, 1))


def naive_fib_stat(perm: tuple) -> int:
    """Longest suffix holding the top values whose pattern avoids
    231, 312, and 321; checked by trying every window length."""
    n = len(perm)
    best = 0
    for k in range(1, n + 1):
        window = perm[n - k:]
        if set(window) != set(range(n - k + 1, n + 1)):
            continue
        if naive_avoids_all(standardize(window), _FIB_PATTERNS):
            best = k
    return best


def permutations_up_to(max_n: int):
    """Hypothesis strategy drawing one permutation of length 0..max_n."""
    return st.integers(min_value=0, max_value=max_n).flatmap(
        lambda n: st.permutations(tuple(range(1, n + 1))).map(tuple)
    )
