#include "ed/solve.hpp"

#include <cmath>
#include <memory>
#include <optional>

#include "ed/anchor.hpp"

namespace qstring {

namespace {
long double int_pow(long double b, unsigned e) {
  long double r = 1;
  for (; e; e >>= 1, b *= b)
    if (e & 1) r *= b;
  return r;
}
}  // namespace

long double token_bound_q(std::size_t x_len, std::size_t y_len, long double d, std::size_t radix) {
  long double r = radix;
  return 10 * std::sqrt(d * static_cast<long double>(x_len + y_len)) * r * r * r *
         int_pow((r + 2) / r, ceil_log2(x_len));
}

long double token_bound_t(std::size_t x_len, std::size_t /*y_len*/, long double d, std::size_t radix) {
  long double r = radix;
  return 10 * d * d * int_pow(r, 9) * int_pow((r + 2) / r, ceil_log2(x_len));
}

std::size_t default_radix(std::size_t n) {
  double lg = std::log2(static_cast<double>(std::max<std::size_t>(n, 2)));
  return static_cast<std::size_t>(std::ceil(5 * lg - 1e-9));
}

namespace {

struct Program;

struct Node {
  enum class Pc { start, loop, run, done };

  Node(OracleText x_, OracleText y_, std::size_t xo_, std::size_t yo_)
      : x(std::move(x_)), y(std::move(y_)), xo(xo_), yo(yo_) {}

  OracleText x, y;
  std::size_t xo, yo;  // global offsets of the fragments
  Pc pc = Pc::start;
  std::size_t iter = 0;
  std::optional<std::pair<std::size_t, std::size_t>> anchor;
  std::unique_ptr<Program> prog;
  long double burned_q = 0, burned_t = 0;
  std::size_t distance = 0;
  EditScript script;
};

struct Program {
  std::unique_ptr<Node> left, right;
  int stage = 0;
  long double used_q = 0, used_t = 0, limit_q = 0, limit_t = 0;
  std::size_t distance = 0;
  EditScript script;
};

class Scheduler {
 public:
  Scheduler(const SolveOptions& opt, std::size_t n) : opt_(opt), n_(n) {
    stats_.radix = opt.radix ? opt.radix : default_radix(n);
  }

  // nullptr when v finished; otherwise the program whose quota stopped it.
  Program* run(Node& v);
  SolveStats& stats() { return stats_; }

 private:
  Program* run(Program& a);
  Program* burn(long double q, long double t);
  Program* run_base(Node& v);
  void rebuild_program(Node& v, std::size_t k);
  void finish(Node& v);
  long double threshold(std::size_t i) const {
    return int_pow(static_cast<long double>(stats_.radix), static_cast<unsigned>(2 * i + 2));
  }
  // Thresholds beyond the input length all behave alike inside the anchor routines.
  std::size_t anchor_threshold(long double k) const {
    return k >= static_cast<long double>(2 * n_ + 2) ? 2 * n_ + 2 : static_cast<std::size_t>(k);
  }

  SolveOptions opt_;
  std::size_t n_;
  SolveStats stats_;
  std::vector<Node*> nodes_;
  std::vector<Program*> progs_;
};

template <class T>
struct PathGuard {
  PathGuard(std::vector<T*>& s, T* v) : s_(s) { s_.push_back(v); }
  ~PathGuard() { s_.pop_back(); }
  std::vector<T*>& s_;
};

Program* Scheduler::burn(long double q, long double t) {
  if (!opt_.unbounded)
    for (auto it = progs_.rbegin(); it != progs_.rend(); ++it)
      if ((*it)->used_q + q > (*it)->limit_q || (*it)->used_t + t > (*it)->limit_t) return *it;
  for (auto* p : progs_) p->used_q += q, p->used_t += t;
  for (auto* v : nodes_) v->burned_q += q, v->burned_t += t;
  stats_.q_tokens += q;
  stats_.t_tokens += t;
  return nullptr;
}

Program* Scheduler::run_base(Node& v) {
  const std::size_t m = v.y.length();
  if (auto* p = burn(m + 1, m + 1)) return p;
  QueryLedger::Scope scope(v.x.ledger(), "base");
  symbol_t c = v.x.read(1);
  Text ys(m);
  std::size_t hit = 0;
  for (std::size_t j = 1; j <= m; ++j) {
    ys[j - 1] = v.y.read(j);
    if (!hit && ys[j - 1] == c) hit = j;
  }
  if (hit) {
    v.distance = m - 1;
    for (std::size_t j = 1; j <= m; ++j)
      if (j != hit) v.script.ops.push_back(EditOp::Insert(v.yo + j, ys[j - 1]));
  } else if (m == 0) {
    v.distance = 1;
    v.script.ops.push_back(EditOp::Delete(v.xo + 1));
  } else {
    v.distance = m;
    v.script.ops.push_back(EditOp::Substitute(v.xo + 1, ys[0]));
    for (std::size_t j = 2; j <= m; ++j) v.script.ops.push_back(EditOp::Insert(v.yo + j, ys[j - 1]));
  }
  finish(v);
  return nullptr;
}

void Scheduler::rebuild_program(Node& v, std::size_t k) {
  const std::size_t xl = v.x.length(), yl = v.y.length();
  bool keep = false;
  if (v.anchor) keep = is_anchor(v.x, v.y, k, v.anchor->first, v.anchor->second, n_);
  if (keep) return;
  const std::size_t ax = (xl + 1) / 2;
  const std::size_t ay = find_anchor(v.x, v.y, k, ax, n_);
  v.anchor = {ax, ay};
  auto a = std::make_unique<Program>();
  {
    QueryLedger::Scope scope(v.x.ledger(), "equal");
    if (!fragments_equal(v.x.sub(1, ax), v.y.sub(1, ay)))
      a->left = std::make_unique<Node>(v.x.sub(1, ax), v.y.sub(1, ay), v.xo, v.yo);
    if (!fragments_equal(v.x.sub(ax + 1, xl - ax), v.y.sub(ay + 1, yl - ay)))
      a->right = std::make_unique<Node>(v.x.sub(ax + 1, xl - ax), v.y.sub(ay + 1, yl - ay), v.xo + ax, v.yo + ay);
  }
  if (v.prog) ++stats_.terminated;
  v.prog = std::move(a);
}

void Scheduler::finish(Node& v) {
  v.pc = Node::Pc::done;
  ++stats_.nodes;
  const std::size_t xl = v.x.length(), yl = v.y.length();
  if (v.distance >= 1) {
    long double d = v.distance;
    if (v.burned_q > token_bound_q(xl, yl, d, stats_.radix) || v.burned_t > token_bound_t(xl, yl, d, stats_.radix))
      ++stats_.token_violations;
  }
}

Program* Scheduler::run(Node& v) {
  PathGuard<Node> guard(nodes_, &v);
  const std::size_t xl = v.x.length(), yl = v.y.length();
  if (v.pc == Node::Pc::done) return nullptr;
  if (v.pc == Node::Pc::start) {
    if (xl == 1) return run_base(v);
    v.pc = Node::Pc::loop;
  }
  while (true) {
    const long double k = threshold(v.iter);
    if (v.pc == Node::Pc::loop) {
      if (auto* p = burn(std::sqrt(k * static_cast<long double>(xl + yl)), k * k)) return p;
      rebuild_program(v, anchor_threshold(k));
      const long double d = v.iter == 0 ? 1 : threshold(v.iter - 1);
      v.prog->limit_q = opt_.budget_scale * token_bound_q(xl, yl, d, stats_.radix);
      v.prog->limit_t = opt_.budget_scale * token_bound_t(xl, yl, d, stats_.radix);
      v.pc = Node::Pc::run;
    }
    Program* p = run(*v.prog);
    if (p != nullptr && p != v.prog.get()) return p;
    if (p == nullptr && static_cast<long double>(v.prog->distance) < k) {
      v.distance = v.prog->distance;
      v.script = v.prog->script;
      finish(v);
      return nullptr;
    }
    if (p != nullptr) ++stats_.pauses;
    ++v.iter;
    v.pc = Node::Pc::loop;
  }
}

Program* Scheduler::run(Program& a) {
  PathGuard<Program> guard(progs_, &a);
  if (a.stage == 0) {
    if (a.left)
      if (auto* p = run(*a.left)) return p;
    a.stage = 1;
  }
  if (a.stage == 1) {
    if (a.right)
      if (auto* p = run(*a.right)) return p;
    a.stage = 2;
    a.distance = 0;
    for (auto* c : {a.left.get(), a.right.get()})
      if (c) a.distance += c->distance, a.script.append(c->script);
  }
  return nullptr;
}

}  // namespace

SolveResult solve(const OracleText& x, const OracleText& y, const SolveOptions& opt) {
  QueryLedger::Scope scope(x.ledger(), "ed");
  const std::size_t n = std::max<std::size_t>({x.length(), y.length(), 2});
  SolveResult out;
  out.stats.radix = opt.radix ? opt.radix : default_radix(n);
  if (x.length() == 0) {
    out.distance = y.length();
    for (std::size_t j = 1; j <= y.length(); ++j) out.script.ops.push_back(EditOp::Insert(j, y.read(j)));
    return out;
  }
  {
    QueryLedger::Scope eq(x.ledger(), "equal");
    if (fragments_equal(x, y)) return out;
  }
  Scheduler sched(opt, n);
  Node root(x, y, 0, 0);
  if (sched.run(root) != nullptr) throw InvariantError("solve: root call paused");
  out.distance = root.distance;
  out.script = std::move(root.script);
  out.stats = sched.stats();
  return out;
}

}  // namespace qstring
