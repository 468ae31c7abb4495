#include "trispectra/mutation.hpp"

#include <array>

namespace trispectra {

namespace {

constexpr std::array kTerms = {
#define TRISPECTRA_ENUM_ENTRY(id, name) FormulaTerm::id,
    TRISPECTRA_FORMULA_TERMS(TRISPECTRA_ENUM_ENTRY)
#undef TRISPECTRA_ENUM_ENTRY
};

constexpr std::array<std::string_view, kTerms.size()> kNames = {
#define TRISPECTRA_NAME_ENTRY(id, name) name,
    TRISPECTRA_FORMULA_TERMS(TRISPECTRA_NAME_ENTRY)
#undef TRISPECTRA_NAME_ENTRY
};

thread_local std::optional<FormulaTerm> current;

}  // namespace

std::span<const FormulaTerm> all_formula_terms() { return kTerms; }

std::string_view to_string(FormulaTerm term) { return kNames[static_cast<std::size_t>(term)]; }

std::optional<FormulaTerm> formula_term_from_string(std::string_view name) {
  for (std::size_t k = 0; k < kNames.size(); ++k) {
    if (kNames[k] == name) return kTerms[k];
  }
  return std::nullopt;
}

std::optional<FormulaTerm> active_mutation() noexcept { return current; }

ScopedMutation::ScopedMutation(std::optional<FormulaTerm> term) noexcept : previous_(current) {
  current = term;
}

ScopedMutation::~ScopedMutation() { current = previous_; }

}  // namespace trispectra
