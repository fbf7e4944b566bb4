import pytest

import regsets as rs


@pytest.fixture(scope="session")
def corpus():
    """All groups of order <= 16 plus S4, the order-24 dihedral group and
    SL(2,3); caches subgroup enumerations across the whole session."""
    return rs.standard_corpus()


@pytest.fixture(scope="session")
def small_corpus(corpus):
    return [G for G in corpus if G.order <= 12]


@pytest.fixture(scope="session")
def s3():
    return rs.symmetric(3)


@pytest.fixture(scope="session")
def sl23_pair():
    """The order-24 instance with N_G(H) = A: G = SL(2,3), A its Sylow
    2-subgroup, H the cyclic subgroup generated by the least order-4
    element of A."""
    G = rs.sl23()
    A = rs.sylow_subgroup(G.full_subgroup(), 2)
    h = min(a for a in A.members if G.element_order(a) == 4)
    H = rs.generate_subgroup(G, [h])
    return rs.PairSpec(G, H, A)
