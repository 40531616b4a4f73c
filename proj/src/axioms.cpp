#include <array>

#include "lincert/certifier.hpp"
#include "lincert/literal.hpp"

namespace lincert {

namespace {

std::array<AxiomEntry, 5> make_table() {
  return {{
      {AxiomId::Nagata, "NAGATA", "L_d(1^{d^2}), d >= 4",
       "d^2 general simple points impose independent conditions, so L_d(1^{d^2}) is empty "
       "for every multiple when d >= 4",
       std::nullopt},
      {AxiomId::CM21, "CM21", "N = 1, hypothesis H, h >= 1",
       "L_d(m, 1^h) with d^2 = m^2 + h, h >= 1 and d >= m + 2 is empty for every multiple",
       std::nullopt},
      {AxiomId::Special6A, "SPECIAL_6A", "multiple of L_6(2^8,1^4)",
       "L_{6k}((2k)^8, k^4) is empty for every k >= 1 (collision of the four k-fold points)",
       parse_system("6(2^8,1^4)")},
      {AxiomId::Special6B, "SPECIAL_6B", "multiple of L_6(2^7,1^8)",
       "L_{6k}((2k)^7, k^8) is empty for every k >= 1 (reduces to SPECIAL_6A by collision)",
       parse_system("6(2^7,1^8)")},
      {AxiomId::Special9, "SPECIAL_9", "multiple of L_9(3^8,1^9)",
       "L_{9k}((3k)^8, k^9) is empty for every k >= 1 (P-F degeneration, no matching divisors)",
       parse_system("9(3^8,1^9)")},
  }};
}

}  // namespace

std::span<const AxiomEntry> axiom_table() {
  static const std::array<AxiomEntry, 5> table = make_table();
  return table;
}

const AxiomEntry& axiom(AxiomId id) { return axiom_table()[static_cast<std::size_t>(id)]; }

std::string_view name_of(AxiomId id) { return axiom(id).name; }

std::string_view name_of(ExceptionId id) { return id == ExceptionId::A ? "a" : "b"; }

const LinearSystem& exception_base(ExceptionId id) {
  static const LinearSystem a = parse_system("1(1)");
  static const LinearSystem b = parse_system("3(1^9)");
  return id == ExceptionId::A ? a : b;
}

std::optional<Int> match_axiom(AxiomId id, const LinearSystem& system) {
  switch (id) {
    case AxiomId::Nagata: {
      const Int d = system.degree();
      if (d >= 4 && count_at_least_two(system) == 0 && count_simple(system) == checked::mul(d, d)) {
        return 1;
      }
      return std::nullopt;
    }
    case AxiomId::CM21:
      if (count_at_least_two(system) == 1 && count_simple(system) >= 1 && hypothesis_h(system).holds) {
        return 1;
      }
      return std::nullopt;
    default:
      return is_multiple_of(system, *axiom(id).base);
  }
}

std::optional<Int> match_exception(ExceptionId id, const LinearSystem& system) {
  return is_multiple_of(system, exception_base(id));
}

}  // namespace lincert
