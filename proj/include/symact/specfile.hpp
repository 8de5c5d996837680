#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "symact/analyze.hpp"

namespace symact {

struct SpecParseError : std::runtime_error {
  int line;
  SpecParseError(int line_no, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

/// Parsed form of a line-oriented action description:
///
///   version 1
///   builder hermann | sigma | chain | example
///   algebra so 5              # classical family + size
///   tau BDI 1 4               # hermann: fixed-set involution
///   sigma BDI 1 4             # hermann: quotient involution
///   n 2                       # sigma / chain: number of factors
///   twist id | conj           # sigma: wrap-around automorphism
///   involution_h AI 3         # chain: left end
///   involution_k AIII 2 1     # chain: right end
///   example spin7-pair        # example: catalog name
///   seed 42                   # optional
///   tol 1e-8 1e-10            # optional
struct ActionSpec {
  int version = 0;
  std::string builder;
  std::string family;
  int size = 0;
  std::optional<Involution> tau, sigma, inv_h, inv_k;
  int n = 1;
  std::string twist = "id";
  std::string example;
  std::uint64_t seed = 42;
  std::optional<Tolerance> tol;
};

namespace detail {

inline Involution parse_involution(const std::vector<std::string>& tok, int line_no) {
  if (tok.size() < 3) throw SpecParseError(line_no, "involution needs a family and parameters");
  try {
    const int a = std::stoi(tok[2]);
    const int b = tok.size() > 3 ? std::stoi(tok[3]) : 0;
    return build_involution(tok[1], a, b);
  } catch (const SpecParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw SpecParseError(line_no, std::string("bad involution: ") + e.what());
  }
}

inline std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> tok;
  std::string t;
  while (is >> t) {
    if (t[0] == '#') break;
    tok.push_back(t);
  }
  return tok;
}

}  // namespace detail

inline ActionSpec parse_action_spec(std::istream& in) {
  ActionSpec spec;
  std::string line;
  int line_no = 0;
  bool saw_version = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tok = detail::tokenize(line);
    if (tok.empty()) continue;
    const std::string& key = tok[0];
    auto need = [&](std::size_t count) {
      if (tok.size() < 1 + count)
        throw SpecParseError(line_no, "'" + key + "' needs " + std::to_string(count) + " value(s)");
    };
    try {
      if (key == "version") {
        need(1);
        spec.version = std::stoi(tok[1]);
        if (spec.version != 1) throw SpecParseError(line_no, "unsupported version " + tok[1]);
        saw_version = true;
      } else if (key == "builder") {
        need(1);
        spec.builder = tok[1];
      } else if (key == "algebra") {
        need(2);
        spec.family = tok[1];
        spec.size = std::stoi(tok[2]);
      } else if (key == "tau") {
        spec.tau = detail::parse_involution(tok, line_no);
      } else if (key == "sigma") {
        spec.sigma = detail::parse_involution(tok, line_no);
      } else if (key == "involution_h") {
        spec.inv_h = detail::parse_involution(tok, line_no);
      } else if (key == "involution_k") {
        spec.inv_k = detail::parse_involution(tok, line_no);
      } else if (key == "n") {
        need(1);
        spec.n = std::stoi(tok[1]);
        if (spec.n < 1) throw SpecParseError(line_no, "n must be positive");
      } else if (key == "twist") {
        need(1);
        if (tok[1] != "id" && tok[1] != "conj")
          throw SpecParseError(line_no, "twist must be 'id' or 'conj'");
        spec.twist = tok[1];
      } else if (key == "example") {
        need(1);
        spec.example = tok[1];
      } else if (key == "seed") {
        need(1);
        spec.seed = std::stoull(tok[1]);
      } else if (key == "tol") {
        need(2);
        spec.tol = Tolerance(std::stod(tok[1]), std::stod(tok[2]));
      } else {
        throw SpecParseError(line_no, "unknown key '" + key + "'");
      }
    } catch (const SpecParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw SpecParseError(line_no, std::string("bad value: ") + e.what());
    }
  }
  if (!saw_version) throw SpecParseError(line_no, "missing 'version 1' line");
  if (spec.builder.empty()) throw SpecParseError(line_no, "missing 'builder' line");
  return spec;
}

inline ActionSpec parse_action_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open spec file: " + path);
  return parse_action_spec(in);
}

/// Instantiate the action a parsed spec describes. Throws SpecParseError
/// (line 0) on semantically incomplete specs.
inline ActionModel build_from_spec(const ActionSpec& spec) {
  const Tolerance tol = spec.tol.value_or(Tolerance{});
  auto classical = [&]() {
    if (spec.family.empty()) throw SpecParseError(0, "builder requires an 'algebra' line");
    return build_classical(spec.family, spec.size, tol);
  };
  if (spec.builder == "hermann") {
    if (!spec.tau || !spec.sigma)
      throw SpecParseError(0, "hermann builder requires 'tau' and 'sigma'");
    return build_hermann(classical(), *spec.tau, *spec.sigma, "hermann");
  }
  if (spec.builder == "sigma") {
    auto l = classical();
    std::function<Mat(const Mat&)> twist = [](const Mat& x) { return x; };
    if (spec.twist == "conj") {
      if (spec.family != "su") throw SpecParseError(0, "twist 'conj' requires an su algebra");
      const Involution c = complex_conjugation(spec.size);
      twist = [c](const Mat& x) { return c.apply(x); };
    }
    return build_sigma_action(std::move(l), spec.n, twist, "sigma");
  }
  if (spec.builder == "chain") {
    if (!spec.inv_h || !spec.inv_k)
      throw SpecParseError(0, "chain builder requires 'involution_h' and 'involution_k'");
    return build_chain_action(classical(), spec.n, *spec.inv_h, *spec.inv_k, "chain");
  }
  if (spec.builder == "example") {
    if (spec.example == "triality") return build_triality_action(false, tol);
    if (spec.example == "triality-grassmannian") return build_triality_action(true, tol);
    if (spec.example == "spin7-pair") return build_spin7_pair_action(tol);
    if (spec.example == "u3-chain") return build_u3_chain_action(tol);
    if (spec.example == "spin9") return build_spin9_sphere_action(tol);
    throw SpecParseError(0, "unknown example '" + spec.example + "'");
  }
  throw SpecParseError(0, "unknown builder '" + spec.builder + "'");
}

}  // namespace symact
