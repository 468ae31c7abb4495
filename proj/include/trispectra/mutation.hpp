#pragma once

#include <optional>
#include <span>
#include <string_view>

// Every additive term of every closed form in the library is routed through
// formula_term(). Normally this is the identity; a ScopedMutation scales one
// chosen term by 1.01 on the current thread so that the verification suites
// can be shown to constrain each formula.

#define TRISPECTRA_FORMULA_TERMS(X)                    \
  X(LiftDeltaCoupling, "lift.delta_coupling")          \
  X(LiftEigenScale, "lift.eigen_scale")                \
  X(LiftBipartiteSpecial, "lift.bipartite_special")    \
  X(HitOldOld, "hitting.old_old")                      \
  X(HitNewOldConst, "hitting.new_old.const")           \
  X(HitNewOldScale, "hitting.new_old.scale")           \
  X(HitOldNewConst, "hitting.old_new.const")           \
  X(HitOldNewScale, "hitting.old_new.scale")           \
  X(HitNewNewConst, "hitting.new_new.const")           \
  X(HitNewNewScale, "hitting.new_new.scale")           \
  X(ResOldOld, "resistance.old_old")                   \
  X(ResNewOldConst, "resistance.new_old.const")        \
  X(ResNewOldScale, "resistance.new_old.scale")        \
  X(ResNewNewConst, "resistance.new_new.const")        \
  X(ResNewNewScale, "resistance.new_new.scale")        \
  X(KemenyScale, "kemeny.scale")                       \
  X(KemenyRational, "kemeny.rational")                 \
  X(KemenyLinear, "kemeny.linear")                     \
  X(MultScale, "multiplicative.scale")                 \
  X(MultLinear, "multiplicative.linear")               \
  X(AddAdditive, "additive.additive")                  \
  X(AddMultiplicative, "additive.multiplicative")      \
  X(AddQuadratic, "additive.quadratic")                \
  X(AddLinear, "additive.linear")                      \
  X(AddRational, "additive.rational")                  \
  X(KirKirchhoff, "kirchhoff.kirchhoff")               \
  X(KirAdditive, "kirchhoff.additive")                 \
  X(KirMultiplicative, "kirchhoff.multiplicative")     \
  X(KirQuadratic, "kirchhoff.quadratic")               \
  X(KirRational, "kirchhoff.rational")                 \
  X(CrossAdditive, "cross_sum.additive")               \
  X(CrossLinear, "cross_sum.linear")                   \
  X(CrossRational, "cross_sum.rational")               \
  X(NewPairMultiplicative, "new_pair_sum.multiplicative") \
  X(NewPairQuadratic, "new_pair_sum.quadratic")        \
  X(NewPairRational, "new_pair_sum.rational")          \
  X(IterKemeny1, "iterated.kemeny.1")                  \
  X(IterKemeny2, "iterated.kemeny.2")                  \
  X(IterKemeny3, "iterated.kemeny.3")                  \
  X(IterMult1, "iterated.multiplicative.1")            \
  X(IterMult2, "iterated.multiplicative.2")            \
  X(IterMult3, "iterated.multiplicative.3")            \
  X(IterAdd1, "iterated.additive.1")                   \
  X(IterAdd2, "iterated.additive.2")                   \
  X(IterAdd3, "iterated.additive.3")                   \
  X(IterAdd4, "iterated.additive.4")                   \
  X(IterAdd5, "iterated.additive.5")                   \
  X(IterKir1, "iterated.kirchhoff.1")                  \
  X(IterKir2, "iterated.kirchhoff.2")                  \
  X(IterKir3, "iterated.kirchhoff.3")                  \
  X(IterKir4, "iterated.kirchhoff.4")                  \
  X(IterKir5, "iterated.kirchhoff.5")                  \
  X(IterKir6, "iterated.kirchhoff.6")                  \
  X(WebKemeny1, "pseudofractal.kemeny.1")              \
  X(WebKemeny2, "pseudofractal.kemeny.2")              \
  X(WebKemeny3, "pseudofractal.kemeny.3")              \
  X(WebMult1, "pseudofractal.multiplicative.1")        \
  X(WebMult2, "pseudofractal.multiplicative.2")        \
  X(WebMult3, "pseudofractal.multiplicative.3")        \
  X(WebAdd1, "pseudofractal.additive.1")               \
  X(WebAdd2, "pseudofractal.additive.2")               \
  X(WebAdd3, "pseudofractal.additive.3")               \
  X(WebAdd4, "pseudofractal.additive.4")               \
  X(WebAdd5, "pseudofractal.additive.5")               \
  X(WebKir1, "pseudofractal.kirchhoff.1")              \
  X(WebKir2, "pseudofractal.kirchhoff.2")              \
  X(WebKir3, "pseudofractal.kirchhoff.3")              \
  X(WebKir4, "pseudofractal.kirchhoff.4")              \
  X(WebKir5, "pseudofractal.kirchhoff.5")              \
  X(WebKir6, "pseudofractal.kirchhoff.6")

namespace trispectra {

enum class FormulaTerm {
#define TRISPECTRA_ENUM_ENTRY(id, name) id,
  TRISPECTRA_FORMULA_TERMS(TRISPECTRA_ENUM_ENTRY)
#undef TRISPECTRA_ENUM_ENTRY
};

std::span<const FormulaTerm> all_formula_terms();
std::string_view to_string(FormulaTerm term);
std::optional<FormulaTerm> formula_term_from_string(std::string_view name);

std::optional<FormulaTerm> active_mutation() noexcept;

/// Scales one formula term by 1.01 on this thread for the guard's lifetime.
class ScopedMutation {
 public:
  explicit ScopedMutation(std::optional<FormulaTerm> term) noexcept;
  ~ScopedMutation();
  ScopedMutation(const ScopedMutation&) = delete;
  ScopedMutation& operator=(const ScopedMutation&) = delete;

 private:
  std::optional<FormulaTerm> previous_;
};

template <class Scalar>
Scalar formula_term(FormulaTerm term, Scalar value) {
  if (auto active = active_mutation(); active && *active == term) {
    return value * Scalar(101) / Scalar(100);
  }
  return value;
}

}  // namespace trispectra
