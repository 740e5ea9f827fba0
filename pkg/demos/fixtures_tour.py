"""Walk through a few well-known surfaces and show what the library computes.

Run with ``python demos/fixtures_tour.py``.
"""

from __future__ import annotations

from ldp.exact import columns
from ldp.kstar import from_matrix
from ldp.kstar import make_record as kstar_record
from ldp.kstar.surface import elliptic_forms, hyperbolic_form
from ldp.toric import det_pairs, gorenstein_form_pair
from ldp.toric import make_record as toric_record
from ldp.verify import verify_kstar, verify_toric


def show_toric(name, P):
    rec = toric_record(P)
    print(f"== {name}: {P}")
    print(f"   normal form      {rec.matrix}")
    print(f"   weights          {rec.weights}")
    print(f"   class group      Z x {' x '.join(f'Z/{t}' for t in rec.torsion) or '0'}")
    print(f"   |det| of pairs   {det_pairs(rec.matrix)}")
    cols = columns(P)
    for k in range(3):
        v1, v2 = (cols[j] for j in range(3) if j != k)
        u, i = gorenstein_form_pair(v1, v2)
        print(f"   form at cone {k}   u = ({u[0]}, {u[1]}), local index {i}")
    print(f"   Gorenstein index {rec.iota}; verifier: {verify_toric(rec).overall}")


def show_kstar(name, P):
    M = from_matrix(P)
    rec = kstar_record(M)
    print(f"== {name}: {P}")
    print(f"   type {M.kind}, arms {M.arms}, lead {M.lead}")
    for j, u in enumerate(elliptic_forms(M)):
        print(f"   elliptic form {j}  {tuple(str(x) for x in u)}")
    if M.kind == "ee":
        print(f"   hyperbolic form  {tuple(str(x) for x in hyperbolic_form(M))}")
    print(f"   local indices    {rec.gor.local}, Gorenstein index {rec.iota}")
    print(f"   log terminal     {rec.log_terminal}  case {rec.case or '-'}  quasi-smooth {rec.quasi_smooth}")
    print(f"   verifier: {verify_kstar(rec).overall}")


if __name__ == "__main__":
    show_toric("projective plane", ((1, 0, -1), (0, 1, -1)))
    show_toric("4:1 cover of P(2,1,1)", ((1, 1, -3), (0, 4, -4)))
    show_kstar("E6-singular cubic surface", [[-3, -1, 3, 0], [-3, -1, 0, 2], [-2, -1, 1, 1]])
    show_kstar("index-two surface that is not log terminal", [[-6, -1, 5, 0], [-6, -1, 0, 2], [-7, -1, 3, 1]])
    show_kstar("quasi-smooth surface", [[-1, -1, 3, 0], [-1, -1, 0, 2], [0, -1, 1, 1]])
    show_kstar("surface with a parabolic fixed curve", [[-3, 3, 0, 0], [-3, 0, 2, 0], [-2, 1, 1, -1]])
