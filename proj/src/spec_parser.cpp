#include "divtop/spec_parser.hpp"

#include <charconv>
#include <map>

#include "divtop/errors.hpp"

namespace divtop {

namespace {

std::uint64_t parse_number(const std::string& tok, const std::string& context) {
  std::uint64_t v = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (tok.empty() || ec != std::errc() || ptr != last)
    throw ParseError(tok, "expected a positive integer in " + context);
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

// key=value pairs; every key must be expected and appear exactly once.
std::map<std::string, std::uint64_t> parse_keys(const std::vector<std::string>& parts,
                                                const std::vector<std::string>& keys,
                                                const std::string& context) {
  std::map<std::string, std::uint64_t> out;
  for (const auto& part : parts) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw ParseError(part, "expected key=value in " + context);
    auto key = part.substr(0, eq);
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw ParseError(part, "unknown key '" + key + "' in " + context);
    if (out.count(key)) throw ParseError(part, "repeated key '" + key + "'");
    out[key] = parse_number(part.substr(eq + 1), context);
  }
  for (const auto& k : keys)
    if (!out.count(k)) throw ParseError(context, "missing key '" + k + "'");
  return out;
}

std::string render_factor(const PrimePower& f) {
  return f.exponent == 1 ? std::to_string(f.prime)
                         : std::to_string(f.prime) + "^" + std::to_string(f.exponent);
}

}  // namespace

ModuleDescriptor ModuleSpec::module() const {
  switch (kind) {
    case SpecKind::Cyclic: return ModuleDescriptor::cyclic(n);
    case SpecKind::Abelian: return ModuleDescriptor::finite_abelian(factors);
    case SpecKind::VectorSpace: return ModuleDescriptor::vector_space(p, d);
    default: throw InvalidArgument("spec does not describe a finite module");
  }
}

RingDescriptor ModuleSpec::ring() const {
  if (kind != SpecKind::TrivialExtension) throw InvalidArgument("spec does not describe a ring");
  return RingDescriptor::trivial_extension(n, m);
}

ModuleSpec parse_module_spec(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError(text, "expected KIND:ARGS");
  const auto head = text.substr(0, colon);
  const auto body = text.substr(colon + 1);
  ModuleSpec s;

  if (head == "Zn") {
    s.kind = SpecKind::Cyclic;
    s.n = parse_number(body, text);
    if (s.n < 2) throw ParseError(body, "cyclic modulus must be >= 2");
    return s;
  }

  if (head == "ab") {
    s.kind = SpecKind::Abelian;
    for (const auto& tok : split(body, 'x')) {
      auto caret = tok.find('^');
      PrimePower f;
      f.prime = parse_number(tok.substr(0, caret), text);
      f.exponent = 1;
      if (caret != std::string::npos) {
        auto e = parse_number(tok.substr(caret + 1), text);
        if (e < 1 || e > 63) throw ParseError(tok, "exponent must be between 1 and 63");
        f.exponent = static_cast<unsigned>(e);
      }
      if (!is_prime(f.prime)) throw ParseError(tok, "factor base must be prime");
      s.factors.push_back(f);
    }
    try {
      (void)s.module();
    } catch (const Error& e) {
      throw ParseError(body, e.what());
    }
    return s;
  }

  if (head == "vs") {
    s.kind = SpecKind::VectorSpace;
    auto kv = parse_keys(split(body, ','), {"p", "d"}, text);
    s.p = kv["p"];
    if (!is_prime(s.p)) throw ParseError("p=" + std::to_string(s.p), "characteristic must be prime");
    if (kv["d"] < 1 || kv["d"] > 64) throw ParseError("d=" + std::to_string(kv["d"]), "dimension must be 1..64");
    s.d = static_cast<unsigned>(kv["d"]);
    try {
      (void)s.module();
    } catch (const Error& e) {
      throw ParseError(body, e.what());
    }
    return s;
  }

  if (head == "triv") {
    s.kind = SpecKind::TrivialExtension;
    auto kv = parse_keys(split(body, ','), {"n", "m"}, text);
    s.n = kv["n"];
    s.m = kv["m"];
    if (s.m < 2 || s.n < 2 || s.n % s.m != 0)
      throw ParseError("m=" + std::to_string(s.m), "need m >= 2 dividing n");
    return s;
  }

  if (head == "sym") {
    s.kind = SpecKind::Symbolic;
    auto parts = split(body, ',');
    const auto fam = parts.front();
    parts.erase(parts.begin());
    try {
      if (fam == "Z") {
        auto kv = parse_keys(parts, {"N"}, text);
        s.family = SymbolicFamily::integers(kv["N"]);
      } else if (fam == "Q") {
        auto kv = parse_keys(parts, {"B"}, text);
        s.family = SymbolicFamily::rationals(kv["B"]);
      } else if (fam == "E") {
        auto kv = parse_keys(parts, {"p", "D"}, text);
        s.family = SymbolicFamily::prufer(kv["p"], kv["D"]);
      } else {
        throw ParseError(fam, "symbolic family must be Z, Q or E");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(body, e.what());
    }
    return s;
  }

  throw ParseError(head, "unknown module kind (Zn, ab, vs, sym, triv)");
}

std::string render_module_spec(const ModuleSpec& s) {
  switch (s.kind) {
    case SpecKind::Cyclic: return "Zn:" + std::to_string(s.n);
    case SpecKind::Abelian: {
      std::string out = "ab:";
      for (std::size_t i = 0; i < s.factors.size(); ++i) out += (i ? "x" : "") + render_factor(s.factors[i]);
      return out;
    }
    case SpecKind::VectorSpace: return "vs:p=" + std::to_string(s.p) + ",d=" + std::to_string(s.d);
    case SpecKind::TrivialExtension:
      return "triv:n=" + std::to_string(s.n) + ",m=" + std::to_string(s.m);
    case SpecKind::Symbolic: {
      const auto& f = *s.family;
      switch (f.kind()) {
        case FamilyKind::Integers: return "sym:Z,N=" + std::to_string(f.bound());
        case FamilyKind::Rationals: return "sym:Q,B=" + std::to_string(f.bound());
        case FamilyKind::Prufer:
          return "sym:E,p=" + std::to_string(f.prime()) + ",D=" + std::to_string(f.bound());
      }
    }
  }
  return "?";
}

std::string spec_for(const ModuleDescriptor& m) {
  if (m.is_vector_space())
    return "vs:p=" + std::to_string(m.ring().characteristic()) + ",d=" + std::to_string(m.rank());
  if (m.rank() == 1) return "Zn:" + std::to_string(m.moduli().front());
  ModuleSpec s;
  s.kind = SpecKind::Abelian;
  s.factors = m.primary_factors();
  return render_module_spec(s);
}

std::string spec_for(const RingDescriptor& r) {
  if (r.kind() != RingKind::TrivialExtension) throw InvalidArgument("no spec form for " + r.name());
  return "triv:n=" + std::to_string(r.base_modulus()) + ",m=" + std::to_string(r.module_modulus());
}

}  // namespace divtop
