// Generated by tools/gen_character_rings.py; do not edit.
#include "fusion/providers.hpp"

namespace fusion {

namespace {

struct Entry {
  std::string_view group;
  std::string_view json;
};

constexpr Entry kRings[] = {
    {"S3", R"json({"fusion": [{"left": "1", "result": {"1": 1}, "right": "1"}, {"left": "1", "result": {"sgn": 1}, "right": "sgn"}, {"left": "1", "result": {"V": 1}, "right": "V"}, {"left": "sgn", "result": {"sgn": 1}, "right": "1"}, {"left": "sgn", "result": {"1": 1}, "right": "sgn"}, {"left": "sgn", "result": {"V": 1}, "right": "V"}, {"left": "V", "result": {"V": 1}, "right": "1"}, {"left": "V", "result": {"V": 1}, "right": "sgn"}, {"left": "V", "result": {"1": 1, "V": 1, "sgn": 1}, "right": "V"}], "irreducibles": [{"conj": "1", "dim": 1, "id": "1"}, {"conj": "sgn", "dim": 1, "id": "sgn"}, {"conj": "V", "dim": 2, "id": "V"}], "unit": "1"})json"},
    {"D4", R"json({"fusion": [{"left": "1", "result": {"1": 1}, "right": "1"}, {"left": "1", "result": {"chi1": 1}, "right": "chi1"}, {"left": "1", "result": {"chi2": 1}, "right": "chi2"}, {"left": "1", "result": {"chi3": 1}, "right": "chi3"}, {"left": "1", "result": {"E": 1}, "right": "E"}, {"left": "chi1", "result": {"chi1": 1}, "right": "1"}, {"left": "chi1", "result": {"1": 1}, "right": "chi1"}, {"left": "chi1", "result": {"chi3": 1}, "right": "chi2"}, {"left": "chi1", "result": {"chi2": 1}, "right": "chi3"}, {"left": "chi1", "result": {"E": 1}, "right": "E"}, {"left": "chi2", "result": {"chi2": 1}, "right": "1"}, {"left": "chi2", "result": {"chi3": 1}, "right": "chi1"}, {"left": "chi2", "result": {"1": 1}, "right": "chi2"}, {"left": "chi2", "result": {"chi1": 1}, "right": "chi3"}, {"left": "chi2", "result": {"E": 1}, "right": "E"}, {"left": "chi3", "result": {"chi3": 1}, "right": "1"}, {"left": "chi3", "result": {"chi2": 1}, "right": "chi1"}, {"left": "chi3", "result": {"chi1": 1}, "right": "chi2"}, {"left": "chi3", "result": {"1": 1}, "right": "chi3"}, {"left": "chi3", "result": {"E": 1}, "right": "E"}, {"left": "E", "result": {"E": 1}, "right": "1"}, {"left": "E", "result": {"E": 1}, "right": "chi1"}, {"left": "E", "result": {"E": 1}, "right": "chi2"}, {"left": "E", "result": {"E": 1}, "right": "chi3"}, {"left": "E", "result": {"1": 1, "chi1": 1, "chi2": 1, "chi3": 1}, "right": "E"}], "irreducibles": [{"conj": "1", "dim": 1, "id": "1"}, {"conj": "chi1", "dim": 1, "id": "chi1"}, {"conj": "chi2", "dim": 1, "id": "chi2"}, {"conj": "chi3", "dim": 1, "id": "chi3"}, {"conj": "E", "dim": 2, "id": "E"}], "unit": "1"})json"},
    {"Q8", R"json({"fusion": [{"left": "1", "result": {"1": 1}, "right": "1"}, {"left": "1", "result": {"chi_i": 1}, "right": "chi_i"}, {"left": "1", "result": {"chi_j": 1}, "right": "chi_j"}, {"left": "1", "result": {"chi_k": 1}, "right": "chi_k"}, {"left": "1", "result": {"H": 1}, "right": "H"}, {"left": "chi_i", "result": {"chi_i": 1}, "right": "1"}, {"left": "chi_i", "result": {"1": 1}, "right": "chi_i"}, {"left": "chi_i", "result": {"chi_k": 1}, "right": "chi_j"}, {"left": "chi_i", "result": {"chi_j": 1}, "right": "chi_k"}, {"left": "chi_i", "result": {"H": 1}, "right": "H"}, {"left": "chi_j", "result": {"chi_j": 1}, "right": "1"}, {"left": "chi_j", "result": {"chi_k": 1}, "right": "chi_i"}, {"left": "chi_j", "result": {"1": 1}, "right": "chi_j"}, {"left": "chi_j", "result": {"chi_i": 1}, "right": "chi_k"}, {"left": "chi_j", "result": {"H": 1}, "right": "H"}, {"left": "chi_k", "result": {"chi_k": 1}, "right": "1"}, {"left": "chi_k", "result": {"chi_j": 1}, "right": "chi_i"}, {"left": "chi_k", "result": {"chi_i": 1}, "right": "chi_j"}, {"left": "chi_k", "result": {"1": 1}, "right": "chi_k"}, {"left": "chi_k", "result": {"H": 1}, "right": "H"}, {"left": "H", "result": {"H": 1}, "right": "1"}, {"left": "H", "result": {"H": 1}, "right": "chi_i"}, {"left": "H", "result": {"H": 1}, "right": "chi_j"}, {"left": "H", "result": {"H": 1}, "right": "chi_k"}, {"left": "H", "result": {"1": 1, "chi_i": 1, "chi_j": 1, "chi_k": 1}, "right": "H"}], "irreducibles": [{"conj": "1", "dim": 1, "id": "1"}, {"conj": "chi_i", "dim": 1, "id": "chi_i"}, {"conj": "chi_j", "dim": 1, "id": "chi_j"}, {"conj": "chi_k", "dim": 1, "id": "chi_k"}, {"conj": "H", "dim": 2, "id": "H"}], "unit": "1"})json"},
    {"A4", R"json({"fusion": [{"left": "1", "result": {"1": 1}, "right": "1"}, {"left": "1", "result": {"w": 1}, "right": "w"}, {"left": "1", "result": {"w2": 1}, "right": "w2"}, {"left": "1", "result": {"T": 1}, "right": "T"}, {"left": "w", "result": {"w": 1}, "right": "1"}, {"left": "w", "result": {"w2": 1}, "right": "w"}, {"left": "w", "result": {"1": 1}, "right": "w2"}, {"left": "w", "result": {"T": 1}, "right": "T"}, {"left": "w2", "result": {"w2": 1}, "right": "1"}, {"left": "w2", "result": {"1": 1}, "right": "w"}, {"left": "w2", "result": {"w": 1}, "right": "w2"}, {"left": "w2", "result": {"T": 1}, "right": "T"}, {"left": "T", "result": {"T": 1}, "right": "1"}, {"left": "T", "result": {"T": 1}, "right": "w"}, {"left": "T", "result": {"T": 1}, "right": "w2"}, {"left": "T", "result": {"1": 1, "T": 2, "w": 1, "w2": 1}, "right": "T"}], "irreducibles": [{"conj": "1", "dim": 1, "id": "1"}, {"conj": "w2", "dim": 1, "id": "w"}, {"conj": "w", "dim": 1, "id": "w2"}, {"conj": "T", "dim": 3, "id": "T"}], "unit": "1"})json"},
    {"S4", R"json({"fusion": [{"left": "1", "result": {"1": 1}, "right": "1"}, {"left": "1", "result": {"sgn": 1}, "right": "sgn"}, {"left": "1", "result": {"V2": 1}, "right": "V2"}, {"left": "1", "result": {"V3": 1}, "right": "V3"}, {"left": "1", "result": {"V3s": 1}, "right": "V3s"}, {"left": "sgn", "result": {"sgn": 1}, "right": "1"}, {"left": "sgn", "result": {"1": 1}, "right": "sgn"}, {"left": "sgn", "result": {"V2": 1}, "right": "V2"}, {"left": "sgn", "result": {"V3s": 1}, "right": "V3"}, {"left": "sgn", "result": {"V3": 1}, "right": "V3s"}, {"left": "V2", "result": {"V2": 1}, "right": "1"}, {"left": "V2", "result": {"V2": 1}, "right": "sgn"}, {"left": "V2", "result": {"1": 1, "V2": 1, "sgn": 1}, "right": "V2"}, {"left": "V2", "result": {"V3": 1, "V3s": 1}, "right": "V3"}, {"left": "V2", "result": {"V3": 1, "V3s": 1}, "right": "V3s"}, {"left": "V3", "result": {"V3": 1}, "right": "1"}, {"left": "V3", "result": {"V3s": 1}, "right": "sgn"}, {"left": "V3", "result": {"V3": 1, "V3s": 1}, "right": "V2"}, {"left": "V3", "result": {"1": 1, "V2": 1, "V3": 1, "V3s": 1}, "right": "V3"}, {"left": "V3", "result": {"V2": 1, "V3": 1, "V3s": 1, "sgn": 1}, "right": "V3s"}, {"left": "V3s", "result": {"V3s": 1}, "right": "1"}, {"left": "V3s", "result": {"V3": 1}, "right": "sgn"}, {"left": "V3s", "result": {"V3": 1, "V3s": 1}, "right": "V2"}, {"left": "V3s", "result": {"V2": 1, "V3": 1, "V3s": 1, "sgn": 1}, "right": "V3"}, {"left": "V3s", "result": {"1": 1, "V2": 1, "V3": 1, "V3s": 1}, "right": "V3s"}], "irreducibles": [{"conj": "1", "dim": 1, "id": "1"}, {"conj": "sgn", "dim": 1, "id": "sgn"}, {"conj": "V2", "dim": 2, "id": "V2"}, {"conj": "V3", "dim": 3, "id": "V3"}, {"conj": "V3s", "dim": 3, "id": "V3s"}], "unit": "1"})json"},
};

}  // namespace

std::string_view builtin_character_ring_json(std::string_view group) {
  for (const auto& e : kRings)
    if (e.group == group) return e.json;
  throw std::invalid_argument("unknown builtin character ring '" + std::string(group) + "'");
}

std::shared_ptr<const TableFusionRing> builtin_character_ring(std::string_view group) {
  return load_fusion_ring_json(builtin_character_ring_json(group), "char:" + std::string(group));
}

}  // namespace fusion
