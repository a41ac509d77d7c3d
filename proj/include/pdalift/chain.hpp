#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdalift/pda.hpp"
#include "pdalift/validate.hpp"

namespace pdalift {

// One-line construction pipelines, e.g.
//   "2pda(8,1) > bw2(4,2) @(64,64)_12^4"
// Grammar:
//   chain  := base (">" step)*
//   base   := "2pda(" n "," z ")" | "1pda(" n "," z ")"
//           | "i(" n ")" | "j(" n ")" | "g(" n ")" | "h(" n ")"
//   step   := name "(" args? ")" anno?
//   name   := basic | c1 | c2 | t1 | t2 | bw1 | bw2 | bw3 | bw4 | tiling
//           | tilingx | lift2r | nested2g | randbc | pair10x5 | pair12x3
//   anno   := "@" "(" K "," f ")" "_" Z "^" g
// Step arities: basic(n,z[,gc]) with gc in {1,2,n}; c1/c2/t1/bw4/lift2r/
// nested2g take one argument; t2/bw1/bw2/bw3/tiling/tilingx two;
// randbc(b,r,e,alpha,eta,seed,attempts) seven; pair10x5/pair12x3 none.

struct ChainAnnotation {
    long long users = 0;  // K
    long long rows = 0;   // f
    long long stars = 0;  // Z
    long long gain = 0;   // g
};

struct ChainBase {
    std::string name;  // 2pda, 1pda, i, j, g, h
    std::vector<long long> args;
};

struct ChainStep {
    std::string name;
    std::vector<long long> args;
    std::optional<ChainAnnotation> check;
};

struct LiftChain {
    ChainBase base;
    std::vector<ChainStep> steps;

    friend bool operator==(const LiftChain& a, const LiftChain& b);
};

// Throws Error(syntax_error / unknown_step / arity_error) with the byte
// offset of the failure in Error::offset.
LiftChain parse_chain(const std::string& text);

std::string render_chain(const LiftChain& chain);

struct ChainResult {
    PdaArray pda;
    PdaParams parameters;
};

// Executes the steps left to right; every intermediate annotated with
// @(K,f)_Z^g is checked exactly (Error(step_mismatch) on disagreement).
ChainResult run_chain(const LiftChain& chain);
ChainResult run_chain(const std::string& text);

// One step applied to an existing array; the sweep enumerator drives this
// directly.
PdaArray apply_chain_step(const PdaArray& current, const ChainStep& step);

}  // namespace pdalift
