"""Writes include/livsic/builtin_data.hpp: the built-in scenarios as JSON text."""
import itertools
import json
import math
import pathlib

FULL = [[1, 1], [1, 1]]
GOLDEN = [[1, 1], [1, 0]]


def layout(side, gap, k=2):
    row = [0, "gap", 1] if gap else [0, 1]
    out = {"side": side, "root": row}
    for a in range(k):
        out[str(a)] = row
    return out


def golden_layout(side):
    # Under a mother ending (u) or starting (s) with 1 only 0 may follow.
    return {"side": side, "root": [0, 1], "0": [0, 1], "1": [0]}


def swap(w):
    return "".join("1" if c == "0" else "0" for c in w)


def golden_boundary():
    # u-side tables; the s-side copies read every word backwards.
    matching = [
        ("m01", "0", "1", ["0", "1", "0"], 2),
        ("m10", "1", "0", ["0", "0", "1"], 1),
        ("m00", "0", "0", ["0", "1", "0", "1"], 2),
        ("m11", "1", "1", ["0", "0"], 1),
    ]
    boundary = [
        ("b1", "1", ["0"], ["1", "01"]),
        ("b2", "1", ["0", "1"], ["00", "01", "10"]),
    ]
    out = {"matching": [], "boundary": [], "cylinder_gap": [], "cylinder_cylinder": []}
    for side, flip in (("u", lambda w: w), ("s", lambda w: w[::-1])):
        for i, a, b, d, k in matching:
            out["matching"].append({"id": f"{side}-{i}", "side": side, "first": flip(a), "second": flip(b),
                                    "decomposition": [flip(x) for x in d], "split": k})
        for i, base, f, s in boundary:
            out["boundary"].append({"id": f"{side}-{i}", "side": side, "base": flip(base),
                                    "first": [flip(x) for x in f], "second": [flip(x) for x in s]})
    return out


def da_boundary():
    # s-side words, time order; children of M are "0"+M and "1"+M with a gap
    # between. The symbol swap carries each rectangle onto its neighbour and
    # reverses orientation.
    cg, cc = [], []
    mothers = [m for n in (1, 2) for m in map("".join, itertools.product("01", repeat=n))]
    for m in mothers:
        mm = swap(m)
        gap, gap_image = f"0{m}|1{m}", f"0{mm}|1{mm}"
        for c in "01":
            cg.append({"id": f"cg-{c}{m}", "side": "s", "cylinder": c + m, "gap": gap,
                       "segments": [swap(c) + mm, gap_image]})
        if len(m) == 1:
            # image of 0M refined into the slots of its image cylinder
            image = "1" + mm
            cg.append({"id": f"cg4-0{m}", "side": "s", "cylinder": "0" + m, "gap": gap,
                       "segments": ["0" + image, f"0{image}|1{image}", "1" + image, gap_image]})
        pivot = m[-1]
        for tail in "01":
            leaf, other = pivot + tail, swap(pivot) + swap(tail)
            cc.append({"id": f"cc-{m}-{tail}", "side": "s", "leaf": leaf, "first": "0" + m, "second": "1" + m,
                       "other_leaf": other, "decomposition": ["1" + mm, "0" + mm], "split": 1})
        cc.append({"id": f"cc3-{m}", "side": "s", "leaf": pivot + "0", "first": "0" + m, "second": "1" + m,
                   "other_leaf": swap(pivot) + "1", "decomposition": ["1" + mm, "00" + mm, "10" + mm], "split": 1})
    return {"matching": [], "boundary": [], "cylinder_gap": cg, "cylinder_cylinder": cc}


BOWEN = math.log(2) / math.log(3)

SCENARIOS = {
    "horseshoe": {
        "system": {"alphabet": 2, "matrix": FULL,
                   "boundary": {"matching": [], "boundary": [], "cylinder_gap": [], "cylinder_cylinder": []},
                   "layouts": {"u": layout("u", True), "s": layout("s", True)}},
        "potential": {"constant": 0.0, "range": 2, "tag": "uniform Bernoulli"},
        "sides": {side: {"model": "synthesized", "delta": BOWEN, "pressure": 0.0,
                         "cocycle": {"side": side, "kappa": {"depth": 0, "values": {}},
                                     "gamma": {"depth": 1, "values": []}, "layout": layout(side, True)}}
                  for side in ("u", "s")},
    },
    "cantor-third": {
        "system": {"alphabet": 2, "matrix": FULL, "layouts": {"u": layout("u", True), "s": layout("s", True)}},
        "potential": {"constant": 0.0, "range": 2, "tag": "uniform Bernoulli"},
        "sides": {side: {"model": "affine", "ratios": [1 / 3, 1 / 3], "delta": BOWEN, "pressure": 0.0}
                  for side in ("u", "s")},
    },
    "golden-anosov": {
        "system": {"alphabet": 2, "matrix": GOLDEN, "boundary": golden_boundary(),
                   "layouts": {"u": golden_layout("u"), "s": golden_layout("s")}},
        "potential": {"constant": 0.0, "range": 2, "tag": "Parry"},
        "sides": {side: {"model": "measure"} for side in ("u", "s")},
    },
    "da-attractor-toy": {
        "system": {"alphabet": 2, "matrix": FULL, "boundary": da_boundary(),
                   "layouts": {"u": layout("u", False), "s": layout("s", True)}},
        "potential": {"markov": [[0.6, 0.4], [0.4, 0.6]], "tag": "symmetric Markov"},
        "sides": {
            "s": {"model": "synthesized", "delta": 0.8, "pressure": 0.0,
                  "cocycle": {"side": "s",
                              "kappa": {"depth": 2, "values": {"00": 1.0, "01": 1.1, "10": 1.1, "11": 1.0}},
                              "gamma": {"depth": 1, "values": []}, "layout": layout("s", True)}},
            "u": {"model": "measure"},
        },
    },
}


def main():
    root = pathlib.Path(__file__).resolve().parent.parent
    lines = ["#pragma once", "", "// Generated by tools/gen_builtins.py.", "",
             "#include <array>", "#include <string_view>", "#include <utility>", "",
             "namespace livsic::builtin_data {", "",
             f"inline constexpr std::array<std::pair<std::string_view, std::string_view>, {len(SCENARIOS)}> scenarios{{{{"]
    for name, body in SCENARIOS.items():
        text = json.dumps({"name": name, **body}, indent=1)
        lines.append(f'    {{"{name}", R"json({text})json"}},')
    lines += ["}};", "", "}  // namespace livsic::builtin_data", ""]
    (root / "include/livsic/builtin_data.hpp").write_text("\n".join(lines))


if __name__ == "__main__":
    main()
