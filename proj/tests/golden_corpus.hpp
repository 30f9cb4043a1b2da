#pragma once

// Hand-derived ground truth for the syntactic toolkit: ten types with their
// small/admissible status and hat image, and twenty formulas with their
// prefix classification. Shared by the unit tests and the acceptance suite.

namespace golden {

struct TypeCase {
  const char* text;
  bool small;
  bool admissible;
  const char* hat;  // printed form of the X-free image
};

inline constexpr TypeCase kTypes[] = {
    {"0", true, true, "0"},
    {"X", true, true, "0"},
    {"X(0)(0)", true, true, "0(0)(0)"},
    {"0(X)", false, true, "0(0)"},
    {"0(0(X))", false, false, "0(0(0))"},
    {"1", true, true, "0(0)"},
    {"X(X)", false, true, "0(0)"},
    {"0 -> X", true, true, "0(0)"},
    {"X(1)", false, true, "0(0(0))"},
    {"X(X(0))", false, true, "0(0(0))"},
};

struct FormulaCase {
  const char* text;
  const char* label;
};

inline constexpr FormulaCase kFormulas[] = {
    // plain universal and existential prefixes
    {"forall a:0. forall c:X. ||c|| <=R ||c||", "forall-formula"},
    {"forall x:X. forall y:X. ||x + y|| <=R c_p", "forall-formula"},
    {"forall x:X. x prec 1_X", "forall-formula"},
    {"forall x:X. ~(||x|| <=R c_p) -> ||x|| =R c_p", "forall-formula"},
    {"forall f:X(0). forall k:0. ||C(f) - f(k)|| <=R c_p", "forall-formula"},
    {"~(c_p =R c_p)", "forall-formula"},
    {"exists n:0. n <=0 n", "exists-formula"},
    {"exists x:X. exists y:X. ||x - y|| =R c_p", "exists-formula"},

    // delta sentences
    {"forall a:0. exists b:0 <= a. forall c:X. b <=0 a", "delta-sentence"},
    {"forall a:0. exists b:0 <= a. b <=0 a", "delta-sentence"},
    {"forall a:1. exists b:X <= C(\\n:0. 1_X). forall c:0. ||b|| <=R a",
     "delta-sentence"},
    {"forall a:0. exists b:1 <= (\\n:0. a). forall c:X. b(a) <=0 a",
     "delta-sentence"},
    {"forall a:0. forall d:0. exists b:0 <= a. exists e:0 <= d. forall c:X. "
     "b <=0 e",
     "delta-sentence"},

    // Skolem normal forms (a leading bounded existential block)
    {"exists B:0(0) <= (\\a:0. a). forall a:0. forall c:X. B(a) <=0 a",
     "skolem-form"},
    {"exists B:0(0) <= (\\a:0. a). forall a:0. B(a) <=0 a", "skolem-form"},
    {"exists b:X <= 1_X. ||b|| =R c_p", "skolem-form"},
    {"exists b:0 <= 3. forall c:X. b <=0 3", "skolem-form"},

    // shapes outside every class
    {"forall a:0(0(X)). a prec a", "other"},          // inadmissible type
    {"forall a:0. exists b:0. b <=0 a", "other"},     // unbounded inner ∃
    {"forall a:0 <= 3. a <=0 3", "other"},            // bounded universal
};

}  // namespace golden
