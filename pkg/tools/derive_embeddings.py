"""Derive restriction matrices for the bundled catalog from epsilon coordinates.

Run once; the printed matrices are frozen into src/coiso/data/*.toml and
locked there by the branching expectations.  Not imported by the package.
"""

from fractions import Fraction as F

H = F(1, 2)


def fund_eps(family, n):
    """Fundamental weights of a classical group in epsilon coordinates."""
    if family == "A":  # SL_{n+1}, n+1 coordinates
        return [[1] * (i + 1) + [0] * (n - i) for i in range(n)]
    if family == "C":
        return [[1] * (i + 1) + [0] * (n - i - 1) for i in range(n)]
    if family == "B":
        out = [[1] * (i + 1) + [0] * (n - i - 1) for i in range(n - 1)]
        return out + [[H] * n]
    if family == "D":
        out = [[1] * (i + 1) + [0] * (n - i - 1) for i in range(n - 2)]
        return out + [[H] * (n - 1) + [-H], [H] * n]
    raise ValueError(family)


def eps_to_fund(family, v):
    n = len(v)
    if family == "A":
        return [v[i] - v[i + 1] for i in range(n - 1)]
    if family == "C":
        return [v[i] - v[i + 1] for i in range(n - 1)] + [v[-1]]
    if family == "B":
        return [v[i] - v[i + 1] for i in range(n - 1)] + [2 * v[-1]]
    if family == "D":
        return [v[i] - v[i + 1] for i in range(n - 1)] + [v[-2] + v[-1]]
    raise ValueError(family)


def restriction(big_family, big_rank, image, small_parts):
    """image(eps_vector) -> list of per-part vectors; small_parts converts them to H coords."""
    cols = []
    for w in fund_eps(big_family, big_rank):
        parts = image([F(x) for x in w])
        coords = []
        for conv, vec in zip(small_parts, parts):
            coords.extend(conv(vec))
        cols.append(coords)
    return [list(r) for r in zip(*cols)]


def show(label, m):
    rows = ", ".join("[" + ", ".join(f'"{x}"' for x in row) + "]" for row in m)
    print(f"{label}: restriction = [{rows}]")


def A(v):
    return eps_to_fund("A", v)


def ident(v):
    return list(v)


if __name__ == "__main__":
    # SL_{n+1} > SL_n (upper-left block)
    for n in range(2, 6):
        show(f"sl{n+1}>sl{n}", restriction("A", n, lambda v, n=n: [v[:n] + []], [lambda u: A(u)]))
    # SL_{n+1} > GL_n = SL_n . T1, torus acts by t on the first n coordinates, t^-n on the last
    for n in range(2, 6):
        def img(v, n=n):
            return [v[:n], [sum(v[:n]) - n * v[n]]]
        # torus charge of eps_i is 1 (i<=n) and -n for eps_{n+1}; weights sum-zero modulo the determinant
        # normalise: charge(eps_{n+1}) = -n, so charge(v) = sum_{i<=n} v_i - n v_{n+1}
        show(f"sl{n+1}>gl{n}", restriction("A", n, img, [A, ident]))
    # Spin_{2m+1} > Spin_{2m}
    for m in (2, 3):
        if m == 2:
            # D2 = A1 x A1: eps1 -/+ eps2 coroots
            show("spin5>spin4", restriction("B", 2, lambda v: [[v[0] - v[1]], [v[0] + v[1]]], [ident, ident]))
        else:
            show("spin7>spin6", restriction("B", 3, lambda v: [v], [lambda u: eps_to_fund("D", u)]))
    # Spin_{2m} > Spin_{2m-1}
    show("spin6>spin5", restriction("D", 3, lambda v: [v[:2]], [lambda u: eps_to_fund("B", u)]))
    show("spin8>spin7", restriction("D", 4, lambda v: [v[:3]], [lambda u: eps_to_fund("B", u)]))
    # Sp6 > Sp4 x SL2
    show("sp6>sp4xsl2", restriction("C", 3, lambda v: [v[:2], [v[2]]], [lambda u: eps_to_fund("C", u), ident]))

    # Spin7 > G2: eps1, eps2, eps3 -> short roots 2a1+a2, a1+a2, a1 in G2 fundamental coordinates
    g2 = {0: [F(1), F(0)], 1: [F(-1), F(1)], 2: [F(2), F(-1)]}

    def to_g2(v):
        return [sum(v[i] * g2[i][k] for i in range(3)) for k in range(2)]

    show("spin7>g2", restriction("B", 3, lambda v: [v], [to_g2]))
    # Spin9 > G2 . T1 (item 11): eps1..3 -> G2 as above, eps4 -> torus
    show("spin9>g2t1", restriction("B", 4, lambda v: [v[:3], [v[3]]], [to_g2, ident]))
    # Spin11 > Spin7 x SL2 (item 12): SO8 eps1..4 -> spin weights of B3, eps5 -> 2 (SO3 vector rep)
    spin = [[H, H, H], [H, H, -H], [H, -H, H], [H, -H, -H]]

    def b5img(v):
        d = [sum(v[i] * spin[i][k] for i in range(4)) for k in range(3)]
        return [d, [2 * v[4]]]

    show("spin11>spin7xsl2", restriction("B", 5, b5img, [lambda u: eps_to_fund("B", u), ident]))
    # Sp4 Levi subgroups
    show("sp4>l_long", restriction("C", 2, lambda v: [[v[1]], [v[0]]], [ident, ident]))
    show("sp4>l_short", restriction("C", 2, lambda v: [[v[0] - v[1]], [v[0] + v[1]]], [ident, ident]))
    # SL4 > S(GL2 x GL2)
    show(
        "sl4>sl2xsl2xt1",
        restriction("A", 3, lambda v: [[v[0] - v[1]], [v[2] - v[3]], [H * (v[0] + v[1] - v[2] - v[3])]], [ident, ident, ident]),
    )
    # SL4 > SL2 x SL2 (item 1 of the one-sided list, n = 2)
    show("sl4>sl2xsl2", restriction("A", 3, lambda v: [[v[0] - v[1]], [v[2] - v[3]]], [ident, ident]))
    # Sp6 > SL2^3 (item 9, n = 3)
    show("sp6>sl2^3", restriction("C", 3, lambda v: [[v[0]], [v[1]], [v[2]]], [ident, ident, ident]))
    # principal SL2 in SL3 and Sp4
    show("sl3>so3", restriction("A", 2, lambda v: [[2 * v[0] - 2 * v[2]]], [ident]))
    show("sp4>sl2principal", restriction("C", 2, lambda v: [[3 * v[0] + v[1]]], [ident]))
    # SL3 > T2 (coordinates = simple-root coordinates)
    show("sl3>t2", restriction("A", 2, lambda v: [[v[0] - sum(v) / 3, sum(v) / 3 - v[2]]], [ident]))
    # Remark pairs: Sp4 > Sp2 (first coordinate), Spin5 > Spin3
    show("sp4>sp2", restriction("C", 2, lambda v: [[v[0]]], [ident]))
    show("spin5>spin3", restriction("B", 2, lambda v: [[2 * v[0]]], [ident]))
