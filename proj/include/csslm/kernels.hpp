#pragma once

// Scalar-generic compute kernels. Every formula on the training path is
// written once here and instantiated twice: with plain doubles (evaluation,
// cache refresh, finite-difference checks) and with autodiff Vars (gradient
// steps). Both instantiations perform the identical sequence of arithmetic,
// so the two paths agree bit-for-bit.

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "csslm/autodiff.hpp"
#include "csslm/errors.hpp"
#include "csslm/math.hpp"

namespace csslm::kernels {

struct DoubleCtx {
  using S = double;
  double c(double v) const { return v; }
  double value(double v) const { return v; }
  double tanh(double x) const { return std::tanh(x); }
  double div_by(double x, double k) const { return x / k; }
  double scale(double x, double k) const { return x * k; }
  double sqrt(double x) const { return std::sqrt(x); }
  double sum(std::span<const double> v) const {
    return sorted_sum(std::vector<double>(v.begin(), v.end()));
  }
  double lse(std::span<const double> v) const {
    return log_sum_exp(std::vector<double>(v.begin(), v.end()));
  }
  double dot(std::span<const double> u, std::span<const double> v) const { return csslm::dot(u, v); }
  double dot_const(std::span<const double> u, std::span<const double> v) const { return csslm::dot(u, v); }
};

struct TapeCtx {
  using S = ad::Var;
  ad::Tape* tape;
  ad::Var c(double v) const { return tape->constant(v); }
  double value(ad::Var v) const { return tape->value(v); }
  ad::Var tanh(ad::Var x) const { return tape->tanh(x); }
  ad::Var div_by(ad::Var x, double k) const { return tape->div_by(x, k); }
  ad::Var scale(ad::Var x, double k) const { return tape->scale(x, k); }
  ad::Var sqrt(ad::Var x) const { return tape->sqrt(x); }
  ad::Var sum(std::span<const ad::Var> v) const { return tape->sum_sorted(v); }
  ad::Var lse(std::span<const ad::Var> v) const { return tape->log_sum_exp(v); }
  ad::Var dot(std::span<const ad::Var> u, std::span<const ad::Var> v) const { return tape->dot(u, v); }
  ad::Var dot_const(std::span<const ad::Var> u, std::span<const double> v) const {
    return tape->dot_const(u, v);
  }
};

// Read-only view of all trainable tensors, flattened row-major.
template <class S>
struct ParamsRef {
  std::size_t vocab = 0, embed_dim = 0, hidden = 0, classes = 0;
  std::span<const S> embed;       // V*E
  std::span<const S> w_d, b_d;    // H*E, H
  std::span<const S> w_c, b_c;    // H*E, H
  std::span<const S> w_t, b_t;    // Y*2H, Y
};

// One encoded instance plus its vector norms (norms are reused across every
// similarity this representation participates in).
template <class S>
struct Rep {
  std::vector<S> d, c, x;
  S nd, nc, nx;
};

template <class Ctx, class S = typename Ctx::S>
Rep<S> encode_rep(const Ctx& ctx, const ParamsRef<S>& p, std::span<const std::int32_t> tokens) {
  if (tokens.empty()) throw ConfigError("cannot encode an empty token sequence");
  const std::size_t E = p.embed_dim, H = p.hidden;

  // Mean pool in value-sorted order per dimension: permutation-invariant.
  std::vector<S> pooled;
  pooled.reserve(E);
  std::vector<S> column(tokens.size());
  for (std::size_t e = 0; e < E; ++e) {
    for (std::size_t t = 0; t < tokens.size(); ++t) {
      const auto row = static_cast<std::size_t>(tokens[t]);
      if (row >= p.vocab) throw ConfigError("token id out of range for the embedding table");
      column[t] = p.embed[row * E + e];
    }
    pooled.push_back(ctx.div_by(ctx.sum(column), static_cast<double>(tokens.size())));
  }

  auto head = [&](std::span<const S> w, std::span<const S> b) {
    std::vector<S> out;
    out.reserve(H);
    for (std::size_t h = 0; h < H; ++h)
      out.push_back(ctx.tanh(ctx.dot(w.subspan(h * E, E), pooled) + b[h]));
    return out;
  };
  Rep<S> rep;
  rep.d = head(p.w_d, p.b_d);
  rep.c = head(p.w_c, p.b_c);
  rep.x = rep.d;
  rep.x.insert(rep.x.end(), rep.c.begin(), rep.c.end());
  rep.nd = ctx.sqrt(ctx.dot(rep.d, rep.d));
  rep.nc = ctx.sqrt(ctx.dot(rep.c, rep.c));
  rep.nx = ctx.sqrt(ctx.dot(rep.x, rep.x));
  return rep;
}

// cosine(u, v) / tau with the zero-vector convention: either side zero -> 0.
template <class Ctx, class S = typename Ctx::S>
S sim_pair(const Ctx& ctx, double tau, std::span<const S> u, std::span<const S> v, const S& nu,
           const S& nv) {
  if (u.size() != v.size()) throw ConfigError("similarity: dimension mismatch");
  if (ctx.value(nu) == 0.0 || ctx.value(nv) == 0.0) return ctx.c(0.0);
  return ctx.div_by(ctx.dot(u, v) / (nu * nv), tau);
}

// Same, with the right-hand side a fixed cached vector.
template <class Ctx, class S = typename Ctx::S>
S sim_to_const(const Ctx& ctx, double tau, std::span<const S> u, const S& nu,
               std::span<const double> v, double nv) {
  if (u.size() != v.size()) throw ConfigError("similarity: dimension mismatch");
  if (ctx.value(nu) == 0.0 || nv == 0.0) return ctx.c(0.0);
  return ctx.div_by(ctx.dot_const(u, v) / ctx.scale(nu, nv), tau);
}

// Logits of the task classifier: W_t x + b_t.
template <class Ctx, class S = typename Ctx::S>
std::vector<S> logits(const Ctx& ctx, const ParamsRef<S>& p, std::span<const S> x) {
  const std::size_t twoH = 2 * p.hidden;
  if (x.size() != twoH) throw ConfigError("classifier: representation dimension mismatch");
  std::vector<S> out;
  out.reserve(p.classes);
  for (std::size_t y = 0; y < p.classes; ++y)
    out.push_back(ctx.dot(p.w_t.subspan(y * twoH, twoH), x) + p.b_t[y]);
  return out;
}

// log p(y | x) via the stabilized log-softmax.
template <class Ctx, class S = typename Ctx::S>
S log_prob(const Ctx& ctx, const ParamsRef<S>& p, std::span<const S> x, std::int32_t label) {
  std::vector<S> z = logits(ctx, p, x);
  return z[static_cast<std::size_t>(label)] - ctx.lse(z);
}

}  // namespace csslm::kernels
