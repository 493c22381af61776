#include "csslm/autodiff.hpp"

#include <algorithm>

namespace csslm::ad {

Var Tape::sum_sorted(std::span<const Var> terms) {
  if (terms.empty()) return constant(0.0);
  std::vector<double> vals(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) vals[i] = val(terms[i]);
  std::sort(vals.begin(), vals.end());
  double acc = 0.0;
  for (double x : vals) acc += x;

  const auto begin = static_cast<std::uint32_t>(args_.size());
  for (const Var& t : terms) args_.push_back(t.id);
  Var out = push(Op::kSumSorted, acc);
  nodes_.back().args_begin = begin;
  nodes_.back().args_end = static_cast<std::uint32_t>(args_.size());
  return out;
}

Var Tape::log_sum_exp(std::span<const Var> terms) {
  double m = val(terms[0]);
  for (const Var& t : terms) m = std::max(m, val(t));
  std::vector<double> e(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) e[i] = std::exp(val(terms[i]) - m);
  std::sort(e.begin(), e.end());
  double acc = 0.0;
  for (double x : e) acc += x;

  const auto begin = static_cast<std::uint32_t>(args_.size());
  for (const Var& t : terms) args_.push_back(t.id);
  Var out = push(Op::kLogSumExp, m + std::log(acc));
  nodes_.back().args_begin = begin;
  nodes_.back().args_end = static_cast<std::uint32_t>(args_.size());
  return out;
}

Var Tape::dot(std::span<const Var> u, std::span<const Var> v) {
  double acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += val(u[i]) * val(v[i]);

  const auto begin = static_cast<std::uint32_t>(args_.size());
  for (const Var& x : u) args_.push_back(x.id);
  for (const Var& x : v) args_.push_back(x.id);
  Var out = push(Op::kDot, acc);
  nodes_.back().args_begin = begin;
  nodes_.back().args_end = static_cast<std::uint32_t>(args_.size());
  return out;
}

Var Tape::dot_const(std::span<const Var> u, std::span<const double> coeff) {
  double acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += val(u[i]) * coeff[i];

  const auto begin = static_cast<std::uint32_t>(args_.size());
  for (const Var& x : u) args_.push_back(x.id);
  // cargs_ is kept index-aligned with args_ for kDotConst nodes.
  const auto cbegin = static_cast<std::uint32_t>(cargs_.size());
  for (double c : coeff) cargs_.push_back(c);
  Var out = push(Op::kDotConst, acc);
  nodes_.back().args_begin = begin;
  nodes_.back().args_end = static_cast<std::uint32_t>(args_.size());
  nodes_.back().aux = static_cast<double>(cbegin);
  return out;
}

void Tape::backward(Var root) {
  for (auto& n : nodes_) n.grad = 0.0;
  nodes_[static_cast<std::size_t>(root.id)].grad = 1.0;

  for (std::int32_t i = root.id; i >= 0; --i) {
    const Node& n = nodes_[static_cast<std::size_t>(i)];
    const double g = n.grad;
    if (g == 0.0) continue;
    auto& ga = nodes_;
    switch (n.op) {
      case Op::kConst:
      case Op::kLeaf:
        break;
      case Op::kAdd:
        ga[static_cast<std::size_t>(n.a)].grad += g;
        ga[static_cast<std::size_t>(n.b)].grad += g;
        break;
      case Op::kSub:
        ga[static_cast<std::size_t>(n.a)].grad += g;
        ga[static_cast<std::size_t>(n.b)].grad -= g;
        break;
      case Op::kMul:
        ga[static_cast<std::size_t>(n.a)].grad += g * ga[static_cast<std::size_t>(n.b)].val;
        ga[static_cast<std::size_t>(n.b)].grad += g * ga[static_cast<std::size_t>(n.a)].val;
        break;
      case Op::kDiv: {
        const double vb = ga[static_cast<std::size_t>(n.b)].val;
        ga[static_cast<std::size_t>(n.a)].grad += g / vb;
        ga[static_cast<std::size_t>(n.b)].grad -= g * n.val / vb;
        break;
      }
      case Op::kNeg:
        ga[static_cast<std::size_t>(n.a)].grad -= g;
        break;
      case Op::kTanh:
        ga[static_cast<std::size_t>(n.a)].grad += g * (1.0 - n.val * n.val);
        break;
      case Op::kExp:
        ga[static_cast<std::size_t>(n.a)].grad += g * n.val;
        break;
      case Op::kLog:
        ga[static_cast<std::size_t>(n.a)].grad += g / ga[static_cast<std::size_t>(n.a)].val;
        break;
      case Op::kSqrt:
        ga[static_cast<std::size_t>(n.a)].grad += g / (2.0 * n.val);
        break;
      case Op::kAddC:
        ga[static_cast<std::size_t>(n.a)].grad += g;
        break;
      case Op::kScale:
        ga[static_cast<std::size_t>(n.a)].grad += g * n.aux;
        break;
      case Op::kDivC:
        ga[static_cast<std::size_t>(n.a)].grad += g / n.aux;
        break;
      case Op::kSumSorted:
        for (std::uint32_t k = n.args_begin; k < n.args_end; ++k)
          ga[static_cast<std::size_t>(args_[k])].grad += g;
        break;
      case Op::kLogSumExp:
        for (std::uint32_t k = n.args_begin; k < n.args_end; ++k) {
          const auto child = static_cast<std::size_t>(args_[k]);
          ga[child].grad += g * std::exp(ga[child].val - n.val);
        }
        break;
      case Op::kDot: {
        const std::uint32_t count = (n.args_end - n.args_begin) / 2;
        for (std::uint32_t k = 0; k < count; ++k) {
          const auto ui = static_cast<std::size_t>(args_[n.args_begin + k]);
          const auto vi = static_cast<std::size_t>(args_[n.args_begin + count + k]);
          ga[ui].grad += g * ga[vi].val;
          ga[vi].grad += g * ga[ui].val;
        }
        break;
      }
      case Op::kDotConst: {
        const auto cbegin = static_cast<std::uint32_t>(n.aux);
        for (std::uint32_t k = n.args_begin; k < n.args_end; ++k)
          ga[static_cast<std::size_t>(args_[k])].grad += g * cargs_[cbegin + (k - n.args_begin)];
        break;
      }
    }
  }
}

}  // namespace csslm::ad
