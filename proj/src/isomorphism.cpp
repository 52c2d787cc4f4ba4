#include "ribbonball/isomorphism.hpp"

#include <cstdint>

namespace ribbonball {

namespace {

// Breadth-first relabeling of a connected graph from `start`. Emits five
// integers per dart in label order. When `reference` is given, generation
// stops at the first entry that differs; the return value is the sign of
// (code - reference) at that point.
class BfsCoder {
 public:
  explicit BfsCoder(const RibbonGraph& g) : g_(g), label_(g.num_darts(), -1) {}

  int run(Dart start, const std::vector<std::int32_t>* reference, bool stop_on_greater_only) {
    std::fill(label_.begin(), label_.end(), -1);
    order_.clear();
    code_.clear();
    label_[start] = 0;
    order_.push_back(start);
    int cmp = 0;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const Dart x = order_[i];
      const Dart s = g_.sigma(x), a = g_.alpha(x);
      for (Dart y : {s, a}) {
        if (label_[y] < 0) {
          label_[y] = static_cast<int>(order_.size());
          order_.push_back(y);
        }
      }
      const std::int32_t entry[5] = {label_[s], label_[a], g_.twisted(x) ? 1 : 0,
                                     static_cast<std::int32_t>(g_.vertex_color(x)),
                                     static_cast<std::int32_t>(g_.face_color(x))};
      for (std::int32_t v : entry) {
        if (reference && cmp == 0) {
          const std::int32_t r = (*reference)[code_.size()];
          if (v != r) {
            cmp = v < r ? -1 : 1;
            if (!stop_on_greater_only || cmp > 0) return cmp;
          }
        }
        code_.push_back(v);
      }
    }
    if (static_cast<int>(order_.size()) != g_.num_darts()) throw Error("graph is not connected");
    return cmp;
  }

  const std::vector<std::int32_t>& code() const { return code_; }
  const std::vector<Dart>& order() const { return order_; }

 private:
  const RibbonGraph& g_;
  std::vector<int> label_;
  std::vector<Dart> order_;
  std::vector<std::int32_t> code_;
};

void append_int(std::string& out, std::int32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((static_cast<std::uint32_t>(v) >> (8 * i)) & 0xff));
}

}  // namespace

std::string canonical_form(const RibbonGraph& g) {
  BfsCoder coder(g);
  coder.run(0, nullptr, false);
  std::vector<std::int32_t> best = coder.code();
  for (Dart d = 1; d < g.num_darts(); ++d) {
    if (coder.run(d, &best, true) < 0) best = coder.code();
  }
  std::string out;
  out.reserve(8 + 4 * best.size());
  append_int(out, static_cast<std::int32_t>(g.role()));
  append_int(out, g.num_darts());
  for (std::int32_t v : best) append_int(out, v);
  return out;
}

std::optional<std::vector<Dart>> is_isomorphic(const RibbonGraph& g, const RibbonGraph& h) {
  BfsCoder cg(g), ch(h);
  cg.run(0, nullptr, false);
  if (!is_connected(h)) throw Error("graph is not connected");
  if (g.num_darts() != h.num_darts() || g.role() != h.role()) return std::nullopt;
  for (Dart start = 0; start < h.num_darts(); ++start) {
    if (ch.run(start, &cg.code(), false) != 0) continue;
    std::vector<Dart> map(g.num_darts());
    for (std::size_t i = 0; i < cg.order().size(); ++i) map[cg.order()[i]] = ch.order()[i];
    return map;
  }
  return std::nullopt;
}

bool is_isomorphic_up_to_mirror(const RibbonGraph& g, const RibbonGraph& h) {
  return is_isomorphic(g, h).has_value() || is_isomorphic(g, reflect(h)).has_value();
}

RibbonGraph relabel(const RibbonGraph& g, const std::vector<Dart>& perm) {
  const int n = g.num_darts();
  if (static_cast<int>(perm.size()) != n) throw Error("relabeling has wrong size");
  std::vector<Dart> sigma(n), alpha(n);
  std::vector<bool> twist(n);
  std::vector<Color> vc(n), fc(n);
  for (Dart d = 0; d < n; ++d) {
    const Dart p = perm[d];
    sigma[p] = perm[g.sigma(d)];
    alpha[p] = perm[g.alpha(d)];
    twist[p] = g.twisted(d);
    vc[p] = g.vertex_color(d);
    fc[p] = g.face_color(d);
  }
  return RibbonGraph(std::move(sigma), std::move(alpha), g.role(), std::move(twist), std::move(vc), std::move(fc));
}

}  // namespace ribbonball
