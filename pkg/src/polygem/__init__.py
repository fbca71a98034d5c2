"""Exact mod-2 computations around iterated Eilenberg-MacLane fibrations.

Subpackages and modules:

* ``steenrod``   -- Adem reduction, admissible monomials, polynomial action.
* ``modules``    -- bases and Steenrod action for the unstable modules in play.
* ``series``     -- Poincare series arithmetic and the Milgram generator catalogue.
* ``fiber``      -- primitive-level linear algebra and graded fiber cohomology.
* ``tower``      -- the degree-by-degree killing tower with verified properties.
* ``classifier`` -- the stable 2-polyGEM decision procedure.
* ``service``    -- FastAPI wrapper; ``cli`` is a thin client of it.
"""

__version__ = "0.1.0"
