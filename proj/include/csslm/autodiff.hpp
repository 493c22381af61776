#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace csslm::ad {

class Tape;

// Handle into a Tape. Cheap to copy; valid for the tape's lifetime.
struct Var {
  Tape* tape = nullptr;
  std::int32_t id = -1;
  double value() const;
};

// Eager reverse-mode tape. Values are computed at node creation; backward()
// fills gradients for every node, read back through grad(). The n-ary sum
// and log-sum-exp reductions accumulate in value-sorted order so results are
// invariant to the enumeration order of their inputs, and log-sum-exp
// subtracts the max term before exponentiating.
class Tape {
 public:
  Var constant(double v) { return push(Op::kConst, v); }
  Var leaf(double v) { return push(Op::kLeaf, v); }

  Var add(Var a, Var b) { return push(Op::kAdd, val(a) + val(b), a.id, b.id); }
  Var sub(Var a, Var b) { return push(Op::kSub, val(a) - val(b), a.id, b.id); }
  Var mul(Var a, Var b) { return push(Op::kMul, val(a) * val(b), a.id, b.id); }
  Var div(Var a, Var b) { return push(Op::kDiv, val(a) / val(b), a.id, b.id); }
  Var neg(Var a) { return push(Op::kNeg, -val(a), a.id); }
  Var tanh(Var a) { return push(Op::kTanh, std::tanh(val(a)), a.id); }
  Var exp(Var a) { return push(Op::kExp, std::exp(val(a)), a.id); }
  Var log(Var a) { return push(Op::kLog, std::log(val(a)), a.id); }
  Var sqrt(Var a) { return push(Op::kSqrt, std::sqrt(val(a)), a.id); }

  Var add_const(Var a, double k) { return push(Op::kAddC, val(a) + k, a.id, -1, k); }
  Var scale(Var a, double k) { return push(Op::kScale, val(a) * k, a.id, -1, k); }
  Var div_by(Var a, double k) { return push(Op::kDivC, val(a) / k, a.id, -1, k); }

  // Sum of the terms, accumulated in value-sorted order. Empty input yields 0.
  Var sum_sorted(std::span<const Var> terms);

  // log(sum exp(terms)); terms must be non-empty.
  Var log_sum_exp(std::span<const Var> terms);

  // Sequential dot product of two equal-length Var spans.
  Var dot(std::span<const Var> u, std::span<const Var> v);

  // Dot of a Var span against fixed coefficients.
  Var dot_const(std::span<const Var> u, std::span<const double> coeff);

  // Seeds d(root)/d(root)=1 and accumulates gradients into every node.
  void backward(Var root);

  double value(Var v) const { return nodes_[static_cast<std::size_t>(v.id)].val; }
  double grad(Var v) const { return nodes_[static_cast<std::size_t>(v.id)].grad; }

  std::size_t size() const { return nodes_.size(); }
  void reserve(std::size_t n) { nodes_.reserve(n); }

 private:
  enum class Op : std::uint8_t {
    kConst, kLeaf, kAdd, kSub, kMul, kDiv, kNeg, kTanh, kExp, kLog, kSqrt,
    kAddC, kScale, kDivC, kSumSorted, kLogSumExp, kDot, kDotConst,
  };
  struct Node {
    Op op;
    std::int32_t a = -1, b = -1;
    std::uint32_t args_begin = 0, args_end = 0;  // range into args_ (and cargs_ for kDotConst)
    double aux = 0.0;
    double val = 0.0;
    double grad = 0.0;
  };

  double val(Var v) const { return nodes_[static_cast<std::size_t>(v.id)].val; }

  Var push(Op op, double value, std::int32_t a = -1, std::int32_t b = -1, double aux = 0.0) {
    Node n;
    n.op = op;
    n.a = a;
    n.b = b;
    n.aux = aux;
    n.val = value;
    nodes_.push_back(n);
    return Var{this, static_cast<std::int32_t>(nodes_.size() - 1)};
  }

  std::vector<Node> nodes_;
  std::vector<std::int32_t> args_;
  std::vector<double> cargs_;
};

inline double Var::value() const { return tape->value(*this); }

inline Var operator+(Var a, Var b) { return a.tape->add(a, b); }
inline Var operator-(Var a, Var b) { return a.tape->sub(a, b); }
inline Var operator*(Var a, Var b) { return a.tape->mul(a, b); }
inline Var operator/(Var a, Var b) { return a.tape->div(a, b); }
inline Var operator-(Var a) { return a.tape->neg(a); }
inline Var operator+(Var a, double k) { return a.tape->add_const(a, k); }
inline Var operator+(double k, Var a) { return a.tape->add_const(a, k); }
inline Var operator-(Var a, double k) { return a.tape->add_const(a, -k); }
inline Var operator*(Var a, double k) { return a.tape->scale(a, k); }
inline Var operator*(double k, Var a) { return a.tape->scale(a, k); }
inline Var operator/(Var a, double k) { return a.tape->div_by(a, k); }
inline Var tanh(Var a) { return a.tape->tanh(a); }
inline Var exp(Var a) { return a.tape->exp(a); }
inline Var log(Var a) { return a.tape->log(a); }
inline Var sqrt(Var a) { return a.tape->sqrt(a); }

}  // namespace csslm::ad
