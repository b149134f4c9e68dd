#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "divtop/arith.hpp"
#include "divtop/module.hpp"
#include "divtop/symbolic.hpp"

namespace divtop {

enum class SpecKind { Cyclic, Abelian, VectorSpace, Symbolic, TrivialExtension };

/// A parsed MODULE-SPEC string:
///   Zn:12  ab:2^2x3  vs:p=3,d=2  sym:Z,N=100  sym:Q,B=10  sym:E,p=2,D=8
///   triv:n=4,m=2
struct ModuleSpec {
  SpecKind kind = SpecKind::Cyclic;
  std::uint64_t n = 0;              // Zn modulus, or triv base modulus
  std::uint64_t m = 0;              // triv module modulus
  std::uint64_t p = 0;              // vs characteristic
  unsigned d = 0;                   // vs dimension
  std::vector<PrimePower> factors;  // ab factors in written order
  std::optional<SymbolicFamily> family;

  bool is_finite_module() const {
    return kind == SpecKind::Cyclic || kind == SpecKind::Abelian || kind == SpecKind::VectorSpace;
  }
  /// Throws InvalidArgument for symbolic and ring specs.
  ModuleDescriptor module() const;
  RingDescriptor ring() const;

  bool operator==(const ModuleSpec&) const = default;
};

/// Throws ParseError naming the offending token.
ModuleSpec parse_module_spec(const std::string& text);
std::string render_module_spec(const ModuleSpec& spec);

/// Spec string for a finite module; noncyclic groups use their sorted
/// prime-power factors.
std::string spec_for(const ModuleDescriptor& m);
std::string spec_for(const RingDescriptor& r);

}  // namespace divtop
