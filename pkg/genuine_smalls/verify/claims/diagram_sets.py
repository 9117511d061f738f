"""
Claims about the node sets indexing the central characters of the split covers.
"""

from ...diagram_sets import diagram_of, enumerate_sets, set_class
from ...fixtures import central_character_count
from ...rootsys import build, quotient
from ..checks import expect_equal
from ..suite import ClaimSuite
from .rootsys import SIMPLY_LACED

suite = ClaimSuite("diagram-sets")


@suite.claim("counts", topic="number of node sets against P/(2P+R) and the expected counts")
def counts():
    for cartan, rank in SIMPLY_LACED:
        rs = build(cartan, rank)
        found = len(enumerate_sets(diagram_of(cartan, rank)))
        expect_equal(f"node sets of {rs.label}", quotient(rs, "P", "2P+R").order, found)
        expect_equal(
            f"central characters of {rs.label}", central_character_count(cartan, rank), found
        )
    return f"{len(SIMPLY_LACED)} types"


@suite.claim("classes", topic="node sets map bijectively onto P/(2P+R)")
def classes():
    # set_class also checks that w_S fixes rho/2 modulo the weight lattice
    for cartan, rank in SIMPLY_LACED:
        rs = build(cartan, rank)
        lattice = quotient(rs, "P", "2P+R")
        labels = {set_class(rs, s, lattice) for s in enumerate_sets(diagram_of(cartan, rank))}
        expect_equal(f"distinct classes of {rs.label}", lattice.order, len(labels))
    return f"{len(SIMPLY_LACED)} types"
