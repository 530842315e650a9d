#!/usr/bin/env python3
"""Regenerates src/providers/character_rings.cpp from small character tables.

Fusion multiplicities are the character inner products
N^w_{uv} = (1/|G|) sum_C |C| chi_u(C) chi_v(C) conj(chi_w(C)).
"""

import cmath
import json
import pathlib

W = cmath.exp(2j * cmath.pi / 3)

# name: (class sizes, [(id, conj id, character values)])
TABLES = {
    "S3": ([1, 3, 2], [
        ("1", "1", [1, 1, 1]),
        ("sgn", "sgn", [1, -1, 1]),
        ("V", "V", [2, 0, -1]),
    ]),
    "D4": ([1, 1, 2, 2, 2], [
        ("1", "1", [1, 1, 1, 1, 1]),
        ("chi1", "chi1", [1, 1, 1, -1, -1]),
        ("chi2", "chi2", [1, 1, -1, 1, -1]),
        ("chi3", "chi3", [1, 1, -1, -1, 1]),
        ("E", "E", [2, -2, 0, 0, 0]),
    ]),
    "Q8": ([1, 1, 2, 2, 2], [
        ("1", "1", [1, 1, 1, 1, 1]),
        ("chi_i", "chi_i", [1, 1, 1, -1, -1]),
        ("chi_j", "chi_j", [1, 1, -1, 1, -1]),
        ("chi_k", "chi_k", [1, 1, -1, -1, 1]),
        ("H", "H", [2, -2, 0, 0, 0]),
    ]),
    "A4": ([1, 3, 4, 4], [
        ("1", "1", [1, 1, 1, 1]),
        ("w", "w2", [1, 1, W, W * W]),
        ("w2", "w", [1, 1, W * W, W]),
        ("T", "T", [3, -1, 0, 0]),
    ]),
    "S4": ([1, 6, 3, 8, 6], [
        ("1", "1", [1, 1, 1, 1, 1]),
        ("sgn", "sgn", [1, -1, 1, 1, -1]),
        ("V2", "V2", [2, 0, 2, -1, 0]),
        ("V3", "V3", [3, 1, -1, 0, -1]),
        ("V3s", "V3s", [3, -1, -1, 0, 1]),
    ]),
}


def inner(sizes, a, b):
    return sum(s * x * y.conjugate() for s, x, y in zip(sizes, a, b)) / sum(sizes)


def ring(sizes, chars):
    for i, (_, _, a) in enumerate(chars):
        for j, (_, _, b) in enumerate(chars):
            assert abs(inner(sizes, a, b) - (i == j)) < 1e-9, "table is not orthonormal"
    fusion = []
    for u, _, cu in chars:
        for v, _, cv in chars:
            prod = [complex(x) * y for x, y in zip(cu, cv)]
            result = {}
            for w, _, cw in chars:
                m = inner(sizes, prod, [complex(x) for x in cw])
                n = round(m.real)
                assert abs(m - n) < 1e-9 and n >= 0
                if n:
                    result[w] = n
            fusion.append({"left": u, "right": v, "result": result})
    return {
        "unit": "1",
        "irreducibles": [{"id": i, "dim": int(c[0].real if isinstance(c[0], complex) else c[0]), "conj": cj}
                         for i, cj, c in chars],
        "fusion": fusion,
    }


def main():
    out = ['// Generated by tools/gen_character_rings.py; do not edit.',
           '#include "fusion/providers.hpp"', '', 'namespace fusion {', '', 'namespace {', '',
           'struct Entry {', '  std::string_view group;', '  std::string_view json;', '};', '',
           'constexpr Entry kRings[] = {']
    for name, (sizes, chars) in TABLES.items():
        text = json.dumps(ring(sizes, chars), sort_keys=True)
        out.append(f'    {{"{name}", R"json({text})json"}},')
    out += ['};', '', '}  // namespace', '',
            'std::string_view builtin_character_ring_json(std::string_view group) {',
            '  for (const auto& e : kRings)',
            '    if (e.group == group) return e.json;',
            '  throw std::invalid_argument("unknown builtin character ring \'" + std::string(group) + "\'");',
            '}', '',
            'std::shared_ptr<const TableFusionRing> builtin_character_ring(std::string_view group) {',
            '  return load_fusion_ring_json(builtin_character_ring_json(group), "char:" + std::string(group));',
            '}', '', '}  // namespace fusion', '']
    target = pathlib.Path(__file__).resolve().parent.parent / "src" / "providers" / "character_rings.cpp"
    target.write_text("\n".join(out))


if __name__ == "__main__":
    main()
