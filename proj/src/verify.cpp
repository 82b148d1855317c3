#include "rdx/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <unordered_set>
#include <utility>

#include "rdx/canonical.hpp"
#include "rdx/classes.hpp"
#include "rdx/enumerate.hpp"
#include "rdx/grammar.hpp"
#include "rdx/partition.hpp"
#include "rdx/roman.hpp"

namespace rdx {
namespace {

constexpr int kMaxCounterexamples = 8;

constexpr ValueSet kSet1 = 1u << 1;                 // attains 1 only
constexpr ValueSet kSet01 = (1u << 0) | (1u << 1);  // attains 0 and 1
constexpr ValueSet kSet02 = (1u << 0) | (1u << 2);  // attains 0 and 2
constexpr ValueSet kSet012 = kSet01 | (1u << 2);    // attains all three

// Collects one claim: instance tally, failures keyed by a deterministic
// per-item index, wall time. Thread-safe so sweeps can run under parallel_for.
class ClaimBuilder {
 public:
  ClaimBuilder(std::string suite, std::string claim, int max_n) : start_(now_seconds()) {
    result_.suite = std::move(suite);
    result_.claim = std::move(claim);
    result_.max_n = max_n;
  }

  void tally(long k = 1) {
    std::lock_guard<std::mutex> lock(mu_);
    result_.instances += k;
  }

  void fail(long key, Json payload) {
    std::lock_guard<std::mutex> lock(mu_);
    ++result_.failures;
    bad_.emplace_back(key, std::move(payload));
  }

  void note(std::string text) {
    std::lock_guard<std::mutex> lock(mu_);
    result_.notes.push_back(std::move(text));
  }

  ClaimResult finish() {
    std::stable_sort(bad_.begin(), bad_.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [key, payload] : bad_) {
      (void)key;
      if (static_cast<int>(result_.counterexamples.size()) >= kMaxCounterexamples) break;
      result_.counterexamples.push_back(payload);
    }
    result_.seconds = now_seconds() - start_;
    return result_;
  }

 private:
  std::mutex mu_;
  ClaimResult result_;
  std::vector<std::pair<long, Json>> bad_;
  double start_;
};

// Per-claim sweep cap: the user override (clamped to what stays exact and
// affordable) or the claim's default.
int cap_n(const VerifyOptions& opt, int def, int lo, int hard) {
  int n = opt.max_n > 0 ? opt.max_n : def;
  return std::clamp(n, lo, hard);
}

long cap_samples(const VerifyOptions& opt, long def) {
  return opt.samples > 0 ? opt.samples : def;
}

const std::vector<Graph>& free_trees(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Graph>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<Graph> all;
    for_each_free_tree(n, [&](const Graph& t) { all.push_back(t); });
    it = cache.emplace(n, std::move(all)).first;
  }
  return it->second;
}

const std::vector<Graph>& connected_graphs(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Graph>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<Graph> all;
    for_each_connected_graph(n, [&](const Graph& g) { all.push_back(g); });
    it = cache.emplace(n, std::move(all)).first;
  }
  return it->second;
}

std::vector<Graph> collect_trees(int lo, int hi) {
  std::vector<Graph> items;
  for (int n = lo; n <= hi; ++n)
    for (const Graph& t : free_trees(n)) items.push_back(t);
  return items;
}

std::vector<Graph> collect_connected(int lo, int hi) {
  std::vector<Graph> items;
  for (int n = lo; n <= hi; ++n)
    for (const Graph& g : connected_graphs(n)) items.push_back(g);
  return items;
}

Json failure_json(const Graph& g, const std::vector<std::string>& aspects) {
  Json j;
  j["graph"] = graph_json(g);
  j["aspects"] = aspects;
  return j;
}

// Sweeps items in parallel; `fn` appends human-readable aspect strings for
// anything wrong with its item. Exceptions become failures, not aborts.
void sweep(ClaimBuilder& cb, const VerifyOptions& opt, const std::vector<Graph>& items,
           const std::function<void(const Graph&, std::vector<std::string>&)>& fn) {
  parallel_for(opt.jobs, static_cast<int>(items.size()), [&](int i) {
    cb.tally();
    std::vector<std::string> aspects;
    try {
      fn(items[static_cast<size_t>(i)], aspects);
    } catch (const std::exception& e) {
      aspects.push_back(std::string("exception: ") + e.what());
    }
    if (!aspects.empty()) cb.fail(i, failure_json(items[static_cast<size_t>(i)], aspects));
  });
}

Graph drop_edge(const Graph& g, int u, int v) {
  Graph h(g.n());
  for (auto [a, b] : g.edges())
    if (a != u || b != v) h.add_edge(a, b);
  return h;
}

Graph add_edge_copy(const Graph& g, int u, int v) {
  Graph h = g;
  h.add_edge(u, v);
  return h;
}

RdFunction restrict_map(const RdFunction& f, const std::vector<int>& old_of_new) {
  RdFunction out(old_of_new.size());
  for (size_t i = 0; i < old_of_new.size(); ++i)
    out[i] = f[static_cast<size_t>(old_of_new[i])];
  return out;
}

// ---------------------------------------------------------------------------
// oracle: the solver routes agree with literal reference computations.
// ---------------------------------------------------------------------------

void suite_oracle(const VerifyOptions& opt, std::vector<ClaimResult>& out) {
  {
    int hi = cap_n(opt, 12, 1, 14);
    ClaimBuilder cb("oracle", "gamma_r_tree_vs_brute", hi);
    sweep(cb, opt, collect_trees(1, hi), [](const Graph& t, std::vector<std::string>& bad) {
      int dp = gamma_r_tree(t);
      int brute = gamma_r_bruteforce(t);
      if (dp != brute)
        bad.push_back("tree solver " + std::to_string(dp) + " != exhaustive " +
                      std::to_string(brute));
    });
    out.push_back(cb.finish());
  }
  {
    int hi = cap_n(opt, 14, 1, 14);
    ClaimBuilder cb("oracle", "gamma_tree_vs_brute", hi);
    sweep(cb, opt, collect_trees(1, hi), [](const Graph& t, std::vector<std::string>& bad) {
      int dp = gamma_tree(t);
      int swept = gamma_bruteforce(t);
      if (dp != swept)
        bad.push_back("domination tree solver " + std::to_string(dp) + " != subset sweep " +
                      std::to_string(swept));
    });
    out.push_back(cb.finish());
  }

  // The per-vertex value sets match a literal enumeration of every
  // minimum-weight function, on both solver routes (forest DP for trees,
  // subset sweep for graphs with cycles).
  auto check_partition = [](const Graph& g, std::vector<std::string>& bad) {
    PartitionReport rep = partition_report(g);
    std::vector<RdFunction> fns = enumerate_gamma_r_functions(g);
    if (fns.empty()) {
      bad.push_back("enumeration returned no optimal function");
      return;
    }
    for (const RdFunction& f : fns)
      if (weight(f) != rep.gamma_r) {
        bad.push_back("enumerated function " + function_digits(f) + " has weight " +
                      std::to_string(weight(f)) + ", report says " + std::to_string(rep.gamma_r));
        return;
      }
    std::vector<ValueSet> attained(static_cast<size_t>(g.n()), 0);
    for (const RdFunction& f : fns)
      for (int v = 0; v < g.n(); ++v)
        attained[static_cast<size_t>(v)] |= static_cast<ValueSet>(1u << f[static_cast<size_t>(v)]);
    for (int v = 0; v < g.n(); ++v)
      if (attained[static_cast<size_t>(v)] != rep.value_sets[static_cast<size_t>(v)])
        bad.push_back("vertex " + std::to_string(v) + " attains " +
                      value_set_name(attained[static_cast<size_t>(v)]) + " by enumeration, " +
                      value_set_name(rep.value_sets[static_cast<size_t>(v)]) + " by report");
    std::vector<int> vm;
    for (int v = 0; v < g.n(); ++v)
      if (attains(attained[static_cast<size_t>(v)], 1)) vm.push_back(v);
    if (vm != rep.v_minus) bad.push_back("v_minus disagrees with enumeration");
    bool exc = true;
    for (ValueSet vs : attained)
      if (!(attains(vs, 1) || attains(vs, 2))) exc = false;
    if (exc != rep.excellent) bad.push_back("excellent flag disagrees with enumeration");
  };
  {
    int hi = cap_n(opt, 10, 2, 12);
    ClaimBuilder cb("oracle", "partition_trees_vs_enumeration", hi);
    sweep(cb, opt, collect_trees(2, hi), check_partition);
    out.push_back(cb.finish());
  }
  {
    int hi = cap_n(opt, 6, 2, 7);
    ClaimBuilder cb("oracle", "partition_graphs_vs_enumeration", hi);
    sweep(cb, opt, collect_connected(2, hi), check_partition);
    out.push_back(cb.finish());
  }
}

// ---------------------------------------------------------------------------
// lemmas: local laws about deletions, added edges, optimal functions, and
// the adjacency structure of the value classes.
// ---------------------------------------------------------------------------

// Coalescence: glue two random trees at one vertex and check how optima,
// optimal functions and value classes compose across the cut vertex. Three
// sampling buckets target the three hypotheses in round-robin:
//   0: cut vertex lands in class 01 of the product (restriction laws),
//   1: both glued vertices lie in class 01 of their side (composition laws),
//   2: a 012 vertex glued to an 01 vertex (weight and class of the product).
ClaimResult run_coalescence_laws(const VerifyOptions& opt) {
  long samples = cap_samples(opt, 1000);
  ClaimBuilder cb("lemmas", "coalescence_laws", 0);
  Rng rng(opt.seed);
  auto random_tree = [&rng]() {
    int n = 4 + rng.below(3);
    Graph t(n);
    for (int v = 1; v < n; ++v) t.add_edge(rng.below(v), v);
    return t;
  };
  long hits[3] = {0, 0, 0};

  for (long s = 0; s < samples; ++s) {
    int bucket = static_cast<int>(s % 3);
    // Half the product-class samples draw the cut vertices unrestricted (so
    // the allowed-combination law is tested against genuinely arbitrary
    // gluings); the other half aim at class pairs likely to land in 01.
    bool aimed = bucket != 0 || s % 6 == 3;
    Graph g1, g2;
    PartitionReport rep1, rep2;
    int x1 = -1, x2 = -1;
    bool satisfied = false;
    Coalesced glued;
    PartitionReport rep;
    for (int attempt = 0; attempt < 40 && !satisfied; ++attempt) {
      g1 = random_tree();
      g2 = random_tree();
      rep1 = partition_report(g1);
      rep2 = partition_report(g2);
      if (bucket == 0 && !aimed) {
        x1 = rng.below(g1.n());
        x2 = rng.below(g2.n());
      } else if (bucket == 0) {
        std::vector<int> a1 = class_members(rep1, "01"), b1 = class_members(rep1, "1");
        std::vector<int> a2 = class_members(rep2, "01"), b2 = class_members(rep2, "1");
        std::vector<std::pair<int, int>> options;
        for (int a : a1) {
          for (int b : a2) options.emplace_back(a, b);
          for (int b : b2) options.emplace_back(a, b);
        }
        for (int a : b1)
          for (int b : a2) options.emplace_back(a, b);
        if (options.empty()) continue;
        auto pick = options[static_cast<size_t>(rng.below(static_cast<int>(options.size())))];
        x1 = pick.first;
        x2 = pick.second;
      } else {
        std::vector<int> m1 = class_members(rep1, bucket == 1 ? "01" : "012");
        std::vector<int> m2 = class_members(rep2, "01");
        if (m1.empty() || m2.empty()) continue;
        x1 = m1[static_cast<size_t>(rng.below(static_cast<int>(m1.size())))];
        x2 = m2[static_cast<size_t>(rng.below(static_cast<int>(m2.size())))];
      }
      glued = coalesce(g1, x1, g2, x2);
      rep = partition_report(glued.graph);
      satisfied = bucket != 0 || rep.value_sets[static_cast<size_t>(x1)] == kSet01;
    }
    if (!satisfied) continue;
    const Graph& g = glued.graph;
    int x = x1;  // g1 keeps its indices in the product
    auto fail_here = [&](const std::string& aspect) {
      Json j;
      j["g1"] = graph_json(g1);
      j["x1"] = x1;
      j["g2"] = graph_json(g2);
      j["x2"] = x2;
      j["bucket"] = bucket;
      j["aspect"] = aspect;
      cb.fail(s, std::move(j));
    };
    auto side1 = [&](const RdFunction& f) {
      RdFunction out(static_cast<size_t>(g1.n()));
      for (int v = 0; v < g1.n(); ++v) out[static_cast<size_t>(v)] = f[static_cast<size_t>(v)];
      return out;
    };
    auto side2 = [&](const RdFunction& f) {
      RdFunction out(static_cast<size_t>(g2.n()));
      for (int v = 0; v < g2.n(); ++v)
        out[static_cast<size_t>(v)] = f[static_cast<size_t>(glued.b_map[static_cast<size_t>(v)])];
      return out;
    };

    if (bucket == 0) {
      ++hits[0];
      cb.tally();
      if (rep.gamma_r != rep1.gamma_r + rep2.gamma_r - 1)
        fail_here("product optimum is not the sum of the parts minus one");
      DeletedGraph d1 = delete_vertices(g1, {x1});
      DeletedGraph d2 = delete_vertices(g2, {x2});
      int gr1_minus = gamma_r_auto(d1.graph);
      int gr2_minus = gamma_r_auto(d2.graph);
      bool any1 = false, any0 = false;
      for (const RdFunction& f : enumerate_gamma_r_functions(g)) {
        int at_x = f[static_cast<size_t>(x)];
        RdFunction f1 = side1(f), f2 = side2(f);
        if (at_x == 1) {
          any1 = true;
          if (!is_rdf(g1, f1) || weight(f1) != rep1.gamma_r ||
              !is_rdf(g2, f2) || weight(f2) != rep2.gamma_r)
            fail_here("a 1-at-cut optimum does not restrict to optima on both sides");
          if (weight(restrict_map(f1, d1.old_of_new)) != gr1_minus ||
              weight(restrict_map(f2, d2.old_of_new)) != gr2_minus ||
              !is_rdf(d1.graph, restrict_map(f1, d1.old_of_new)) ||
              !is_rdf(d2.graph, restrict_map(f2, d2.old_of_new)))
            fail_here("a 1-at-cut optimum does not restrict to optima with the cut removed");
        } else if (at_x == 0) {
          any0 = true;
          bool first = is_rdf(g1, f1) && weight(f1) == rep1.gamma_r && !is_rdf(g2, f2) &&
                       is_rdf(d2.graph, restrict_map(f2, d2.old_of_new)) &&
                       weight(restrict_map(f2, d2.old_of_new)) == gr2_minus;
          bool second = is_rdf(g2, f2) && weight(f2) == rep2.gamma_r && !is_rdf(g1, f1) &&
                        is_rdf(d1.graph, restrict_map(f1, d1.old_of_new)) &&
                        weight(restrict_map(f1, d1.old_of_new)) == gr1_minus;
          if (first == second) fail_here("a 0-at-cut optimum fits neither side pattern exactly once");
        }
      }
      if (!any1 || !any0) fail_here("class 01 at the cut but a label never appears there");
      ValueSet c1 = rep1.value_sets[static_cast<size_t>(x1)];
      ValueSet c2 = rep2.value_sets[static_cast<size_t>(x2)];
      bool both01 = c1 == kSet01 && c2 == kSet01;
      bool mixed = (c1 == kSet01 && c2 == kSet1) || (c1 == kSet1 && c2 == kSet01);
      if (!both01 && !mixed) fail_here("cut classes on the two sides are not 01+01 or 01+1");
    } else if (bucket == 1) {
      ++hits[1];
      cb.tally();
      if (rep.gamma_r != rep1.gamma_r + rep2.gamma_r - 1)
        fail_here("product optimum is not the sum of the parts minus one");
      // Any two side optima assigning 1 to the glued vertex combine to a
      // product optimum.
      std::vector<RdFunction> f1s, f2s;
      for (const RdFunction& f : enumerate_gamma_r_functions(g1))
        if (f[static_cast<size_t>(x1)] == 1) f1s.push_back(f);
      for (const RdFunction& f : enumerate_gamma_r_functions(g2))
        if (f[static_cast<size_t>(x2)] == 1) f2s.push_back(f);
      if (f1s.empty() || f2s.empty()) fail_here("no side optimum assigns 1 to its 01 vertex");
      for (const RdFunction& f1 : f1s)
        for (const RdFunction& f2 : f2s) {
          RdFunction f(static_cast<size_t>(g.n()), 0);
          for (int v = 0; v < g1.n(); ++v) f[static_cast<size_t>(v)] = f1[static_cast<size_t>(v)];
          for (int v = 0; v < g2.n(); ++v)
            f[static_cast<size_t>(glued.b_map[static_cast<size_t>(v)])] =
                f2[static_cast<size_t>(v)];
          if (!is_rdf(g, f) || weight(f) != rep.gamma_r) {
            fail_here("combined side optima are not a product optimum");
            break;
          }
        }
      // Classes compose pointwise; the glued vertex stays in 01.
      for (int v = 0; v < g1.n(); ++v)
        if (v != x1 &&
            rep.value_sets[static_cast<size_t>(v)] != rep1.value_sets[static_cast<size_t>(v)]) {
          fail_here("a first-side vertex changed class");
          break;
        }
      for (int v = 0; v < g2.n(); ++v)
        if (v != x2 && rep.value_sets[static_cast<size_t>(glued.b_map[static_cast<size_t>(v)])] !=
                           rep2.value_sets[static_cast<size_t>(v)]) {
          fail_here("a second-side vertex changed class");
          break;
        }
      if (rep.value_sets[static_cast<size_t>(x)] != kSet01)
        fail_here("glued 01 vertices did not stay in class 01");
    } else {
      ++hits[2];
      cb.tally();
      if (rep.gamma_r != rep1.gamma_r + rep2.gamma_r - 1)
        fail_here("product optimum is not the sum of the parts minus one");
      if (rep.value_sets[static_cast<size_t>(x)] != kSet012)
        fail_here("a 012 vertex glued to an 01 vertex is not in class 012");
    }
  }
  for (int b = 0; b < 3; ++b)
    if (hits[b] == 0) {
      Json j;
      j["bucket"] = b;
      j["aspect"] = "sampling bucket never satisfied its hypothesis";
      cb.fail(samples + b, std::move(j));
    }
  return cb.finish();
}

void suite_lemmas(const VerifyOptions& opt, std::vector<ClaimResult>& out) {
  {
    // Deleting v lowers the optimum exactly when v attains 1 in some optimal
    // function, and then by exactly one.
    int hi = cap_n(opt, 7, 2, 7);
    ClaimBuilder cb("lemmas", "deletion_drop", hi);
    sweep(cb, opt, collect_connected(2, hi), [](const Graph& g, std::vector<std::string>& bad) {
      PartitionReport rep = partition_report(g);
      for (int v = 0; v < g.n(); ++v) {
        int reduced = gamma_r_auto(delete_vertices(g, {v}).graph);
        bool drops = reduced < rep.gamma_r;
        bool in_v_minus = std::binary_search(rep.v_minus.begin(), rep.v_minus.end(), v);
        if (drops != in_v_minus)
          bad.push_back("vertex " + std::to_string(v) + ": drop=" + std::to_string(drops) +
                        " but v_minus membership=" + std::to_string(in_v_minus));
        if (drops && reduced != rep.gamma_r - 1)
          bad.push_back("vertex " + std::to_string(v) + ": optimum fell by " +
                        std::to_string(rep.gamma_r - reduced) + ", not 1");
      }
      if (v_minus_by_deletion(g) != rep.v_minus)
        bad.push_back("deletion-based v_minus disagrees with the value sets");
    });
    out.push_back(cb.finish());
  }
  {
    // gamma_R(G) >= gamma_R(G+xy) >= gamma_R(G)-1, with the drop exactly when
    // some optimal function puts {1,2} on {x,y}.
    int hi = cap_n(opt, 7, 2, 7);
    ClaimBuilder cb("lemmas", "edge_add_sandwich", hi);
    sweep(cb, opt, collect_connected(2, hi), [](const Graph& g, std::vector<std::string>& bad) {
      int gr = gamma_r_auto(g);
      std::vector<RdFunction> fns = enumerate_gamma_r_functions(g);
      for (int x = 0; x < g.n(); ++x)
        for (int y = x + 1; y < g.n(); ++y) {
          if (g.has_edge(x, y)) continue;
          int with_edge = gamma_r_auto(add_edge_copy(g, x, y));
          if (with_edge > gr || with_edge < gr - 1) {
            bad.push_back("edge (" + std::to_string(x) + "," + std::to_string(y) +
                          "): optimum moved from " + std::to_string(gr) + " to " +
                          std::to_string(with_edge));
            continue;
          }
          bool pair12 = false;
          for (const RdFunction& f : fns) {
            int a = f[static_cast<size_t>(x)], b = f[static_cast<size_t>(y)];
            if ((a == 1 && b == 2) || (a == 2 && b == 1)) pair12 = true;
          }
          if ((with_edge == gr - 1) != pair12)
            bad.push_back("edge (" + std::to_string(x) + "," + std::to_string(y) + "): drop=" +
                          std::to_string(with_edge == gr - 1) + " but a {1,2} pair " +
                          (pair12 ? "exists" : "does not exist"));
        }
    });
    out.push_back(cb.finish());
  }
  {
    // In every optimal function the 1-vertices induce components of order at
    // most two and never touch a 2-vertex.
    int tree_hi = cap_n(opt, 10, 2, 12);
    int graph_hi = cap_n(opt, 6, 2, 7);
    ClaimBuilder cb("lemmas", "function_structure", tree_hi);
    std::vector<Graph> items = collect_trees(2, tree_hi);
    for (const Graph& g : collect_connected(2, graph_hi))
      if (!is_tree(g)) items.push_back(g);
    sweep(cb, opt, items, [](const Graph& g, std::vector<std::string>& bad) {
      for (const RdFunction& f : enumerate_gamma_r_functions(g)) {
        for (int v = 0; v < g.n(); ++v) {
          if (f[static_cast<size_t>(v)] != 1) continue;
          int ones = 0;
          bool touches_two = false;
          for (int w : g.neighbors(v)) {
            if (f[static_cast<size_t>(w)] == 1) ++ones;
            if (f[static_cast<size_t>(w)] == 2) touches_two = true;
          }
          if (ones > 1)
            bad.push_back("function " + function_digits(f) + ": 1-vertex " + std::to_string(v) +
                          " has " + std::to_string(ones) + " neighbors assigned 1");
          if (touches_two)
            bad.push_back("function " + function_digits(f) + ": 1-vertex " + std::to_string(v) +
                          " is adjacent to a 2-vertex");
          if (!bad.empty()) return;
        }
      }
    });
    out.push_back(cb.finish());
  }
  {
    // Vertices of an excellent tree only ever land in the classes 01, 02, 012.
    int hi = cap_n(opt, 14, 2, 14);
    ClaimBuilder cb("lemmas", "excellent_value_classes", hi);
    sweep(cb, opt, collect_trees(2, hi), [](const Graph& t, std::vector<std::string>& bad) {
      PartitionReport rep = partition_report(t);
      if (!rep.excellent) return;
      for (int v = 0; v < t.n(); ++v) {
        ValueSet vs = rep.value_sets[static_cast<size_t>(v)];
        if (vs != kSet01 && vs != kSet02 && vs != kSet012)
          bad.push_back("vertex " + std::to_string(v) + " is in class " + value_set_name(vs));
      }
    });
    out.push_back(cb.finish());
  }
  {
    // In any tree the vertices attaining 1 induce only K1 and K2 components.
    int hi = cap_n(opt, 14, 2, 14);
    ClaimBuilder cb("lemmas", "v_minus_components", hi);
    sweep(cb, opt, collect_trees(2, hi), [](const Graph& t, std::vector<std::string>& bad) {
      PartitionReport rep = partition_report(t);
      std::vector<char> in_vm(static_cast<size_t>(t.n()), 0);
      for (int v : rep.v_minus) in_vm[static_cast<size_t>(v)] = 1;
      for (int v : rep.v_minus) {
        int inside = 0;
        for (int w : t.neighbors(v))
          if (in_vm[static_cast<size_t>(w)]) ++inside;
        if (inside > 1)
          bad.push_back("vertex " + std::to_string(v) + " has " + std::to_string(inside) +
                        " neighbors inside the induced v_minus subgraph");
      }
    });
    out.push_back(cb.finish());
  }
  {
    // Adjacency near the 02 class of an excellent tree: every 012 vertex has
    // exactly one neighbor attaining 1 and that neighbor is a 012 vertex; an
    // 02 vertex of degree >= 3 has exactly two such neighbors; a degree-2 one
    // either has both neighbors in 012 or sits on a u,x,y,z path with u,z in
    // 01 and y a degree-2 02 vertex; the 01 class is independent.
    int hi = cap_n(opt, 14, 2, 14);
    ClaimBuilder cb("lemmas", "v02_adjacency", hi);
    sweep(cb, opt, collect_trees(2, hi), [](const Graph& t, std::vector<std::string>& bad) {
      PartitionReport rep = partition_report(t);
      if (!rep.excellent) return;
      auto cls = [&](int v) { return rep.value_sets[static_cast<size_t>(v)]; };
      auto in_v_minus = [&](int v) { return attains(cls(v), 1); };
      for (int x = 0; x < t.n(); ++x) {
        ValueSet vs = cls(x);
        if (vs == kSet012) {
          int count = 0;
          bool partner_full = false;
          for (int w : t.neighbors(x))
            if (in_v_minus(w)) {
              ++count;
              partner_full = cls(w) == kSet012;
            }
          if (count != 1 || !partner_full)
            bad.push_back("012 vertex " + std::to_string(x) + " has " + std::to_string(count) +
                          " neighbors attaining 1" +
                          (count == 1 ? " and the partner is not 012" : ""));
        } else if (vs == kSet02) {
          int deg = t.degree(x);
          if (deg < 2) {
            bad.push_back("02 vertex " + std::to_string(x) + " has degree " + std::to_string(deg));
            continue;
          }
          int count = 0;
          for (int w : t.neighbors(x))
            if (in_v_minus(w)) ++count;
          if (deg >= 3 && count != 2)
            bad.push_back("02 vertex " + std::to_string(x) + " of degree " + std::to_string(deg) +
                          " has " + std::to_string(count) + " neighbors attaining 1");
          if (deg == 2) {
            int u = t.neighbors(x)[0], y = t.neighbors(x)[1];
            bool both_full = cls(u) == kSet012 && cls(y) == kSet012;
            auto path_case = [&](int a, int b) {
              if (cls(a) != kSet01 || cls(b) != kSet02 || t.degree(b) != 2) return false;
              for (int z : t.neighbors(b))
                if (z != x && cls(z) == kSet01) return true;
              return false;
            };
            if (!both_full && !path_case(u, y) && !path_case(y, u))
              bad.push_back("degree-2 02 vertex " + std::to_string(x) +
                            " matches neither allowed neighborhood pattern");
          }
        }
      }
      for (int v = 0; v < t.n(); ++v)
        if (cls(v) == kSet01)
          for (int w : t.neighbors(v))
            if (w > v && cls(w) == kSet01)
              bad.push_back("01 vertices " + std::to_string(v) + " and " + std::to_string(w) +
                            " are adjacent");
    });
    out.push_back(cb.finish());
  }
  out.push_back(run_coalescence_laws(opt));
}

// ---------------------------------------------------------------------------
// theorem-main: the base catalog, the recognizer against the definition of
// excellence, and soundness of the generator (exhaustive and randomized).
// ---------------------------------------------------------------------------

void run_base_catalog(const VerifyOptions& opt, std::vector<ClaimResult>& out) {
  (void)opt;
  ClaimBuilder cb("theorem-main", "base_catalog", 0);
  const Catalog& cat = catalog();
  auto top_fail = [&](long key, const std::string& aspect) {
    Json j;
    j["aspect"] = aspect;
    cb.fail(key, std::move(j));
  };
  if (cat.entries.size() != 11) top_fail(100, "catalog does not hold 11 entries");
  const std::map<std::string, int> want_gamma = {{"H1", 2}, {"H2", 3}, {"H3", 4},  {"H4", 5},
                                                 {"H5", 6}, {"H6", 6}, {"H7", 6},  {"H8", 6},
                                                 {"H9", 7}, {"H10", 8}, {"H11", 4}};
  std::map<int, int> strata;
  std::vector<std::string> o4_names;
  for (size_t i = 0; i < cat.entries.size(); ++i) {
    const CatalogEntry& e = cat.entries[i];
    cb.tally();
    std::vector<std::string> bad;
    if (e.name != "H" + std::to_string(i + 1)) bad.push_back("entries out of name order");
    if (!is_tree(e.tree)) bad.push_back("entry is not a tree");
    ++strata[e.k];
    auto itg = want_gamma.find(e.name);
    if (itg == want_gamma.end() || e.gamma_r != itg->second)
      bad.push_back("recorded optimum is not the pinned value");
    if (e.gamma_r != gamma_r_bruteforce(e.tree))
      bad.push_back("recorded optimum disagrees with the exhaustive oracle");
    if (derive_statuses(e.tree) != e.statuses)
      bad.push_back("recorded statuses disagree with the derived partition");
    if (labeling_violation({e.tree, e.statuses}) != -1)
      bad.push_back("recorded statuses violate the structural labeling conditions");
    int k = 0;
    for (char c : e.statuses)
      if (c == 'B' || c == 'C') ++k;
    if (k != e.k) bad.push_back("recorded class count k disagrees with the statuses");
    for (int v = 0; v < e.tree.n(); ++v) {
      DeletedGraph d = delete_vertices(e.tree, {v});
      int want = d.graph.n() == 0 ? 0 : gamma_r_bruteforce(d.graph);
      if (e.gamma_r_minus_v[static_cast<size_t>(v)] != want) {
        bad.push_back("recorded deleted-vertex optimum disagrees with the exhaustive oracle");
        break;
      }
    }
    for (int v : e.o4_vertices) {
      if (e.statuses[static_cast<size_t>(v)] != 'A')
        bad.push_back("designated merge vertex is not an A vertex");
      if (e.gamma_r_minus_v[static_cast<size_t>(v)] != e.gamma_r - 1)
        bad.push_back("designated merge vertex does not drop the optimum by one");
    }
    if (!e.o4_vertices.empty()) {
      o4_names.push_back(e.name);
      if (e.o4_vertices != e.a_vertices)
        bad.push_back("designated entry does not admit every A vertex");
    }
    // The recorded expansion really builds the entry.
    LabeledTree built = replay(e.expansion);
    if (built.tree.n() != e.tree.n() ||
        static_cast<int>(e.replay_of_catalog.size()) != e.tree.n()) {
      bad.push_back("expansion replays to the wrong order");
    } else {
      for (auto [u, v] : e.tree.edges())
        if (!built.tree.has_edge(e.replay_of_catalog[static_cast<size_t>(u)],
                                 e.replay_of_catalog[static_cast<size_t>(v)])) {
          bad.push_back("expansion replays to a different tree");
          break;
        }
      for (int v = 0; v < e.tree.n(); ++v)
        if (built.statuses[static_cast<size_t>(e.replay_of_catalog[static_cast<size_t>(v)])] !=
            e.statuses[static_cast<size_t>(v)]) {
          bad.push_back("expansion replays to different statuses");
          break;
        }
    }
    if (!bad.empty()) {
      Json j;
      j["entry"] = e.name;
      j["aspects"] = bad;
      cb.fail(static_cast<long>(i), std::move(j));
    }
  }
  if (strata != std::map<int, int>{{0, 1}, {1, 1}, {2, 9}})
    top_fail(101, "entries do not split 1/1/9 across k = 0/1/2");
  if (cat.bases != std::vector<std::string>{"H1", "H2", "H3", "H4", "H7"})
    top_fail(102, "generating bases are not H1, H2, H3, H4, H7");
  if (o4_names != std::vector<std::string>{"H3", "H4", "H5"})
    top_fail(103, "designated entries are not H3, H4, H5");
  cb.note("deleting any designated merge vertex lowers the optimum by exactly one "
          "(gamma_r - 1), as certified against the exhaustive oracle");
  out.push_back(cb.finish());
}

void run_recognizer_complete(const VerifyOptions& opt, std::vector<ClaimResult>& out) {
  int hi = cap_n(opt, 14, 2, 16);
  ClaimBuilder cb("theorem-main", "recognizer_complete", hi);
  sweep(cb, opt, collect_trees(2, hi), [](const Graph& t, std::vector<std::string>& bad) {
    PartitionReport rep = partition_report(t);
    Recognition rec = recognize(t);
    if (rec.accepted != rep.excellent) {
      bad.push_back(std::string("recognizer ") + (rec.accepted ? "accepted" : "rejected") +
                    " but the partition says excellent=" + std::to_string(rep.excellent));
      return;
    }
    if (!rec.accepted) {
      if (rec.witness < 0 || rec.witness >= t.n() || is_good_vertex(rep, rec.witness))
        bad.push_back("rejection witness is not a vertex stuck at 0");
      return;
    }
    std::string derived = derive_statuses(t, rep);
    if (rec.labeled.statuses != derived) bad.push_back("recognition statuses are not the derived ones");
    // Independent replay: the certificate rebuilds the input exactly.
    LabeledTree lt = replay(rec.cert);
    if (lt.tree.n() != t.n() || static_cast<int>(rec.input_of_replay.size()) != t.n()) {
      bad.push_back("certificate replays to the wrong order");
      return;
    }
    std::vector<char> seen(static_cast<size_t>(t.n()), 0);
    for (int r = 0; r < t.n(); ++r) {
      int v = rec.input_of_replay[static_cast<size_t>(r)];
      if (v < 0 || v >= t.n() || seen[static_cast<size_t>(v)]) {
        bad.push_back("replay correspondence is not a bijection");
        return;
      }
      seen[static_cast<size_t>(v)] = 1;
      if (lt.statuses[static_cast<size_t>(r)] != derived[static_cast<size_t>(v)])
        bad.push_back("replayed statuses disagree across the correspondence");
    }
    for (auto [a, b] : lt.tree.edges())
      if (!t.has_edge(rec.input_of_replay[static_cast<size_t>(a)],
                      rec.input_of_replay[static_cast<size_t>(b)])) {
        bad.push_back("certificate replays to a different tree");
        break;
      }
    // The valid labeling is unique: no other split of the 02 class into
    // B and C passes the structural conditions.
    std::vector<int> v02;
    for (int v = 0; v < t.n(); ++v)
      if (derived[static_cast<size_t>(v)] == 'B' || derived[static_cast<size_t>(v)] == 'C')
        v02.push_back(v);
    if (v02.size() <= 16) {
      int valid = 0;
      bool derived_valid = false;
      for (uint32_t mask = 0; mask < (1u << v02.size()); ++mask) {
        std::string candidate = derived;
        for (size_t j = 0; j < v02.size(); ++j)
          candidate[static_cast<size_t>(v02[j])] = (mask >> j) & 1u ? 'C' : 'B';
        if (labeling_violation({t, candidate}) == -1) {
          ++valid;
          if (candidate == derived) derived_valid = true;
        }
      }
      if (valid != 1 || !derived_valid)
        bad.push_back("the structural labeling is not unique (" + std::to_string(valid) +
                      " valid splits of the 02 class)");
    }
  });
  out.push_back(cb.finish());
}

void run_generation_exhaustive(const VerifyOptions& opt, std::vector<ClaimResult>& out) {
  int hi = cap_n(opt, 16, 8, 17);
  ClaimBuilder cb("theorem-main", "generation_sound_exhaustive", hi);
  const Catalog& cat = catalog();
  std::unordered_set<std::string> visited;
  std::deque<LabeledTree> queue;
  for (const std::string& name : cat.bases) {
    LabeledTree lt = base_tree(name);
    visited.insert(free_code(lt.tree, &lt.statuses));
    queue.push_back(std::move(lt));
  }
  long product_key = 0;
  auto consider = [&](const LabeledTree& host, const Step& step) {
    long key = product_key++;
    cb.tally();
    Applied a;
    try {
      a = apply_step(host, step);
    } catch (const std::exception& e) {
      Json j;
      j["graph"] = graph_json(host.tree);
      j["host_statuses"] = host.statuses;
      j["op"] = op_name(step.op);
      j["host_vertex"] = step.host_vertex;
      j["piece"] = step.piece;
      j["aspects"] = std::vector<std::string>{std::string("legal step rejected: ") + e.what()};
      cb.fail(key, std::move(j));
      return;
    }
    std::string code = free_code(a.tree.tree, &a.tree.statuses);
    if (!visited.insert(code).second) return;  // labeled shape already certified
    std::vector<std::string> bad;
    if (labeling_violation(a.tree) != -1)
      bad.push_back("product violates the structural labeling conditions");
    try {
      if (derive_statuses(a.tree.tree) != a.tree.statuses)
        bad.push_back("product statuses disagree with the derived partition");
    } catch (const std::exception& e) {
      bad.push_back(std::string("product is not an excellent tree: ") + e.what());
    }
    if (!bad.empty()) {
      Json j = failure_json(a.tree.tree, bad);
      j["statuses"] = a.tree.statuses;
      cb.fail(key, std::move(j));
    }
    queue.push_back(std::move(a.tree));
  };
  while (!queue.empty()) {
    LabeledTree cur = std::move(queue.front());
    queue.pop_front();
    int n = cur.tree.n();
    for (int v = 0; v < n; ++v) {
      char s = cur.statuses[static_cast<size_t>(v)];
      if (s == 'C') {
        for (const char* piece : {"F1", "F2", "F3"}) {
          const Fragment& f = cat.fragment(piece);
          if (n + f.tree.n() <= hi) consider(cur, {OpKind::O1, v, piece, f.attach});
        }
      } else if (s == 'D') {
        const Fragment& f4 = cat.fragment("F4");
        if (n + f4.tree.n() <= hi) consider(cur, {OpKind::O2, v, "F4", f4.attach});
        for (const CatalogEntry& e : cat.entries)
          if (n + e.tree.n() - 1 <= hi)
            for (int pv : e.o4_vertices) consider(cur, {OpKind::O4, v, e.name, pv});
      } else if (s == 'A') {
        for (const CatalogEntry& e : cat.entries)
          if (n + e.tree.n() - 1 <= hi)
            for (int pv : e.o3_vertices) consider(cur, {OpKind::O3, v, e.name, pv});
      }
    }
  }
  cb.note("distinct labeled trees generated: " + std::to_string(visited.size()));
  // Completeness cross-check: every excellent tree up to the joint cap shows
  // up among the generated labeled shapes.
  int complete_hi = std::min(hi, 14);
  long miss_key = 1000000000L;
  for (int n = 2; n <= complete_hi; ++n)
    for (const Graph& t : free_trees(n)) {
      cb.tally();
      PartitionReport rep = partition_report(t);
      if (!rep.excellent) continue;
      std::string sta = derive_statuses(t, rep);
      if (!visited.count(free_code(t, &sta)))
        cb.fail(miss_key++, failure_json(t, {"excellent tree never generated"}));
    }
  cb.note("every excellent tree on at most " + std::to_string(complete_hi) +
          " vertices was generated");
  out.push_back(cb.finish());
}

void run_generation_random(const VerifyOptions& opt, std::vector<ClaimResult>& out) {
  long samples = cap_samples(opt, 10000);
  ClaimBuilder cb("theorem-main", "generation_sound_random", 0);
  parallel_for(opt.jobs, static_cast<int>(samples), [&](int i) {
    cb.tally();
    std::vector<std::string> bad;
    GenerateOptions gopt;
    gopt.steps = 1 + (i % 12);
    gopt.max_n = 200;
    Generated gen;
    try {
      gen = generate(opt.seed + static_cast<uint64_t>(i) * 0x9e3779b97f4a7c15ULL, gopt);
      if (labeling_violation(gen.tree) != -1)
        bad.push_back("generated labeling violates the structural conditions");
      LabeledTree again = replay(gen.cert);
      if (again.tree.edges() != gen.tree.tree.edges() || again.statuses != gen.tree.statuses)
        bad.push_back("replaying the certificate gives a different labeled tree");
      if (i % 10 == 0) {
        if (derive_statuses(gen.tree.tree) != gen.tree.statuses)
          bad.push_back("generated statuses disagree with the derived partition");
      }
    } catch (const std::exception& e) {
      bad.push_back(std::string("exception: ") + e.what());
    }
    if (!bad.empty()) {
      Json j;
      j["sample"] = i;
      j["steps"] = gopt.steps;
      if (gen.tree.tree.n() > 0) j["graph"] = graph_json(gen.tree.tree);
      j["aspects"] = bad;
      cb.fail(i, std::move(j));
    }
  });
  cb.note("every tenth sample additionally re-derives the partition of the product");
  out.push_back(cb.finish());
}

void suite_theorem_main(const VerifyOptions& opt, std::vector<ClaimResult>& out) {
  run_base_catalog(opt, out);
  run_recognizer_complete(opt, out);
  run_generation_exhaustive(opt, out);
  run_generation_random(opt, out);
}

// ---------------------------------------------------------------------------
// classes: the signature trichotomy and the three restricted families with
// their alternative characterizations.
// ---------------------------------------------------------------------------

bool replayed_matches_input(const TSequence& cert, const Graph& input) {
  LabeledTree lt = replay(cert);
  if (lt.tree.n() != input.n()) return false;
  std::string derived = derive_statuses(input);
  return labeled_iso(lt.tree, lt.statuses, input, derived).has_value();
}

void suite_classes(const VerifyOptions& opt, std::vector<ClaimResult>& out) {
  {
    // Excellent trees carry one of four signatures, and R_{012} only at K2.
    int hi = cap_n(opt, 14, 2, 14);
    ClaimBuilder cb("classes", "signature_trichotomy", hi);
    sweep(cb, opt, collect_trees(2, hi), [](const Graph& t, std::vector<std::string>& bad) {
      std::string sig = r_signature(t);
      bool exc = is_excellent(t);
      bool listed = sig == "R_{012}" || sig == "R_{01,02}" || sig == "R_{02,012}" ||
                    sig == "R_{01,02,012}";
      if (exc != listed)
        bad.push_back("excellent=" + std::to_string(exc) + " but signature is " + sig);
      if ((sig == "R_{012}") != (t.n() == 2))
        bad.push_back("signature R_{012} should single out the one-edge tree, got order " +
                      std::to_string(t.n()));
    });
    out.push_back(cb.finish());
  }
  {
    // Signature {01,02} == flexible-pair certificate == corona-style
    // certificate, with both certificates replaying to the input.
    int hi = cap_n(opt, 14, 2, 14);
    ClaimBuilder cb("classes", "two_class_threeway", hi);
    sweep(cb, opt, collect_trees(2, hi), [](const Graph& t, std::vector<std::string>& bad) {
      bool by_signature = r_signature(t) == "R_{01,02}";
      ClassRecognition pair_side = recognize_r0102(t);
      ClassRecognition corona_side = recognize_r0102_corona(t);
      if (pair_side.accepted != by_signature)
        bad.push_back("flexible-pair recognizer disagrees with the signature");
      if (corona_side.accepted != by_signature)
        bad.push_back("corona recognizer disagrees with the signature");
      if (!by_signature || !pair_side.accepted || !corona_side.accepted) return;
      if (!(pair_side.cert.base == "H2" || pair_side.cert.base == "H3"))
        bad.push_back("flexible-pair base is " + pair_side.cert.base);
      for (const Step& s : pair_side.cert.steps)
        if (s.op != OpKind::O5 && s.op != OpKind::O6)
          bad.push_back("flexible-pair certificate uses " + op_name(s.op));
      if (!(corona_side.cert.base == "H2" ||
            corona_side.cert.base.rfind("corona:", 0) == 0))
        bad.push_back("corona base is " + corona_side.cert.base);
      for (const Step& s : corona_side.cert.steps)
        if (s.op != OpKind::O7 && s.op != OpKind::O8)
          bad.push_back("corona certificate uses " + op_name(s.op));
      if (!replayed_matches_input(pair_side.cert, t))
        bad.push_back("flexible-pair certificate does not replay to the input");
      if (!replayed_matches_input(corona_side.cert, t))
        bad.push_back("corona certificate does not replay to the input");
    });
    out.push_back(cb.finish());
  }
  {
    // Signature {02,012} == five-vertex/pair certificate; membership forces an
    // unchanged domination number under every vertex deletion, but not the
    // other way around; on members the domination-good vertices are exactly
    // the 012 class.
    int hi = cap_n(opt, 14, 5, 14);
    ClaimBuilder cb("classes", "uvr_threeway", hi);
    sweep(cb, opt, collect_trees(5, hi), [](const Graph& t, std::vector<std::string>& bad) {
      bool by_signature = r_signature(t) == "R_{02,012}";
      ClassRecognition rec = recognize_r02012(t);
      if (rec.accepted != by_signature)
        bad.push_back("family recognizer disagrees with the signature");
      if (!by_signature || !rec.accepted) return;
      if (!is_uvr(t))
        bad.push_back("a member changes its domination number under some deletion");
      if (rec.cert.base != "H11") bad.push_back("certificate base is " + rec.cert.base);
      for (const Step& s : rec.cert.steps)
        if (s.op != OpKind::O9 && s.op != OpKind::O10)
          bad.push_back("certificate uses " + op_name(s.op));
      if (!replayed_matches_input(rec.cert, t))
        bad.push_back("certificate does not replay to the input");
      std::string sta = derive_statuses(t);
      std::vector<bool> good = gamma_good_vertices(t);
      for (int v = 0; v < t.n(); ++v)
        if (good[static_cast<size_t>(v)] != (sta[static_cast<size_t>(v)] == 'D'))
          bad.push_back("vertex " + std::to_string(v) +
                        ": domination-good does not match status D");
    });
    {
      // Frozen witness that the implication is strictly one-way: the spider
      // with three length-two legs keeps its domination number under every
      // deletion, yet its only optimum puts 2 on the center and 1 on each
      // leaf, leaving the stems stuck at 0.
      cb.tally();
      Graph spider(7);
      spider.add_edge(0, 1);
      spider.add_edge(1, 2);
      spider.add_edge(2, 3);
      spider.add_edge(3, 4);
      spider.add_edge(2, 5);
      spider.add_edge(5, 6);
      std::vector<std::string> bad;
      if (!is_uvr(spider)) bad.push_back("the spider is not deletion-stable");
      if (r_signature(spider) != "R_{0,1,2}")
        bad.push_back("the spider signature is " + r_signature(spider));
      if (recognize_r02012(spider).accepted)
        bad.push_back("the recognizer accepts the spider");
      if (!bad.empty()) cb.fail(1000000, failure_json(spider, bad));
    }
    cb.note("deletion-stability is necessary but not sufficient for membership: "
            "stable trees outside the class exist from order 7 on, and the "
            "one-edge tree is stable with signature R_{012}");
    out.push_back(cb.finish());
  }
  {
    // Corona products: every connected graph appears as the non-leaf part of
    // a two-leaf corona with signature {01,02} and optimum twice its order;
    // over tree spines, every leaf admits a construction that starts at a
    // six-vertex base containing it and grows by star attachments only.
    int hi = cap_n(opt, 5, 2, 5);
    ClaimBuilder cb("classes", "corona_family", hi);
    std::vector<Graph> hosts = collect_connected(2, hi);
    sweep(cb, opt, hosts, [](const Graph& h, std::vector<std::string>& bad) {
      Graph g = corona_graph(h);
      int gr = gamma_r_auto(g);
      if (gr != 2 * h.n())
        bad.push_back("corona optimum " + std::to_string(gr) + " != " +
                      std::to_string(2 * h.n()));
      if (r_signature(g) != "R_{01,02}")
        bad.push_back("corona signature is " + r_signature(g));
      for (int u = 0; u < h.n(); ++u)
        for (int v = u + 1; v < h.n(); ++v)
          if (g.has_edge(u, v) != h.has_edge(u, v)) {
            bad.push_back("the first block of the corona does not induce the host");
            return;
          }
    });
    // The leaf-anchored construction over tree spines.
    long key = 1000000;
    const Catalog& cat = catalog();
    for (int k = 2; k <= 4; ++k)
      for (const Graph& spine : free_trees(k)) {
        Graph t = corona_graph(spine);
        std::string expected(static_cast<size_t>(k), 'C');
        expected.append(static_cast<size_t>(2 * k), 'A');
        for (int w = k; w < t.n(); ++w) {
          cb.tally();
          std::vector<std::string> bad;
          int s = t.neighbors(w)[0];
          int s2 = -1;
          for (int u : spine.neighbors(s))
            if (s2 < 0) s2 = u;
          // Base: the six vertices around the anchor leaf w, statuses CCAAAA.
          std::vector<int> place(static_cast<size_t>(t.n()), -1);
          place[static_cast<size_t>(s)] = 0;
          place[static_cast<size_t>(s2)] = 1;
          place[static_cast<size_t>(w)] = 2;
          for (int u : t.neighbors(s))
            if (u != w && u >= k) place[static_cast<size_t>(u)] = 3;
          int at = 4;
          for (int u : t.neighbors(s2))
            if (u >= k) place[static_cast<size_t>(u)] = at++;
          LabeledTree built = base_tree("H3");
          TSequence cert;
          cert.base = "H3";
          // Remaining spine vertices in search order from the base pair.
          std::vector<int> order;
          std::vector<char> placed(static_cast<size_t>(k), 0);
          placed[static_cast<size_t>(s)] = placed[static_cast<size_t>(s2)] = 1;
          std::deque<int> bfs{s, s2};
          while (!bfs.empty()) {
            int cur = bfs.front();
            bfs.pop_front();
            for (int u : spine.neighbors(cur))
              if (!placed[static_cast<size_t>(u)]) {
                placed[static_cast<size_t>(u)] = 1;
                order.push_back(u);
                bfs.push_back(u);
              }
          }
          const Fragment& f1 = cat.fragment("F1");
          bool broken = false;
          for (int v : order) {
            int parent = -1;
            for (int u : spine.neighbors(v))
              if (place[static_cast<size_t>(u)] >= 0 && u < k) parent = u;
            Step step{OpKind::O5, place[static_cast<size_t>(parent)], "F1", f1.attach};
            Applied a;
            try {
              a = apply_step(built, step);
            } catch (const std::exception& e) {
              bad.push_back(std::string("star attachment rejected: ") + e.what());
              broken = true;
              break;
            }
            built = a.tree;
            cert.steps.push_back(step);
            place[static_cast<size_t>(v)] = a.piece_map[0];
            int leaf_slot = 1;
            for (int u : t.neighbors(v))
              if (u >= k)
                place[static_cast<size_t>(u)] = a.piece_map[static_cast<size_t>(leaf_slot++)];
          }
          if (!broken) {
            LabeledTree via_replay = replay(cert);
            if (via_replay.tree.edges() != built.tree.edges() ||
                via_replay.statuses != built.statuses)
              bad.push_back("assembled certificate does not replay to the construction");
            if (built.tree.n() != t.n()) bad.push_back("construction has the wrong order");
            for (auto [a, b] : t.edges())
              if (place[static_cast<size_t>(a)] < 0 || place[static_cast<size_t>(b)] < 0 ||
                  !built.tree.has_edge(place[static_cast<size_t>(a)],
                                       place[static_cast<size_t>(b)])) {
                bad.push_back("construction misses an edge of the corona");
                break;
              }
            for (int v = 0; v < t.n(); ++v)
              if (built.statuses[static_cast<size_t>(place[static_cast<size_t>(v)])] !=
                  expected[static_cast<size_t>(v)]) {
                bad.push_back("construction statuses disagree with the corona labeling");
                break;
              }
            if (place[static_cast<size_t>(w)] >= 6)
              bad.push_back("anchor leaf did not land inside the base");
          }
          if (!bad.empty()) {
            Json j = failure_json(t, bad);
            j["anchor"] = w;
            cb.fail(key++, std::move(j));
          }
        }
      }
    out.push_back(cb.finish());
  }
}

// ---------------------------------------------------------------------------
// extremal: the four-fifths bound with its equality family, and the sandwich
// bounds on the 02 class of an excellent tree.
// ---------------------------------------------------------------------------

void suite_extremal(const VerifyOptions& opt, std::vector<ClaimResult>& out) {
  {
    // 5 * gamma_R <= 4n for connected graphs, with equality at order 5
    // exactly for the cycle and the path; among trees equality reappears
    // only at order 10, at the two-block member of the extremal family.
    int graph_hi = cap_n(opt, 7, 3, 7);
    int tree_hi = cap_n(opt, 14, 3, 14);
    ClaimBuilder cb("extremal", "four_fifths_bound", tree_hi);
    uint64_t c5 = graph_cert(cycle_graph(5));
    uint64_t p5 = graph_cert(path_graph(5));
    std::string ext10 = free_code(extremal_45_tree(2, {{0, 1}}));
    std::vector<Graph> items = collect_connected(3, graph_hi);
    for (const Graph& t : collect_trees(std::min(graph_hi, tree_hi) + 1, tree_hi))
      items.push_back(t);
    sweep(cb, opt, items, [&](const Graph& g, std::vector<std::string>& bad) {
      int gr = gamma_r_auto(g);
      if (5 * gr > 4 * g.n())
        bad.push_back("optimum " + std::to_string(gr) + " exceeds four fifths of the order");
      if (5 * gr != 4 * g.n()) return;
      if (g.n() == 5) {
        if (uint64_t c = graph_cert(g); c != c5 && c != p5)
          bad.push_back("an order-5 equality graph that is neither the cycle nor the path");
      } else if (g.n() == 10 && is_tree(g)) {
        if (free_code(g) != ext10)
          bad.push_back("an order-10 equality tree outside the extremal family");
      } else {
        bad.push_back("equality at order " + std::to_string(g.n()));
      }
    });
    out.push_back(cb.finish());
  }
  {
    // The extremal family: r five-vertex blocks with linked centers has
    // order 5r, optimum 4r, signature {02,012}, all non-centers in 012, and
    // (for the tree members) a certificate built from five-vertex
    // attachments only.
    ClaimBuilder cb("extremal", "four_fifths_family", 0);
    struct Member {
      int r;
      std::vector<std::pair<int, int>> links;
    };
    std::vector<Member> members = {
        {1, {}},
        {2, {{0, 1}}},
        {3, {{0, 1}, {0, 2}}},
        {3, {{0, 1}, {1, 2}}},
        {3, {{0, 2}, {1, 2}}},
    };
    long key = 0;
    for (const Member& m : members) {
      cb.tally();
      std::vector<std::string> bad;
      Graph t = extremal_45_tree(m.r, m.links);
      if (t.n() != 5 * m.r) bad.push_back("wrong order");
      if (gamma_r_tree(t) != 4 * m.r) bad.push_back("optimum is not four fifths of the order");
      if (r_signature(t) != "R_{02,012}") bad.push_back("signature is " + r_signature(t));
      std::string sta = derive_statuses(t);
      for (int v = 0; v < t.n(); ++v) {
        bool center = v % 5 == 2;
        if (center != (sta[static_cast<size_t>(v)] == 'C')) {
          bad.push_back("statuses do not split centers from block vertices");
          break;
        }
      }
      ClassRecognition rec = recognize_r02012(t);
      if (!rec.accepted)
        bad.push_back("family recognizer rejected a member");
      else
        for (const Step& s : rec.cert.steps)
          if (s.op != OpKind::O9) bad.push_back("certificate uses " + op_name(s.op));
      if (!bad.empty()) cb.fail(key, failure_json(t, bad));
      ++key;
    }
    {
      // Three blocks with the centers joined in a triangle: same optimum and
      // classes, no longer a tree.
      cb.tally();
      std::vector<std::string> bad;
      Graph g(15);
      for (int i = 0; i < 3; ++i)
        for (int v = 0; v < 4; ++v) g.add_edge(5 * i + v, 5 * i + v + 1);
      g.add_edge(2, 7);
      g.add_edge(7, 12);
      g.add_edge(2, 12);
      if (gamma_r_auto(g) != 12) bad.push_back("optimum is not four fifths of the order");
      PartitionReport rep = partition_report(g);
      for (int v = 0; v < g.n(); ++v) {
        ValueSet want = v % 5 == 2 ? kSet02 : kSet012;
        if (rep.value_sets[static_cast<size_t>(v)] != want) {
          bad.push_back("value classes do not split centers from block vertices");
          break;
        }
      }
      if (r_signature(g) != "R_{02,012}") bad.push_back("signature is " + r_signature(g));
      if (!bad.empty()) cb.fail(key, failure_json(g, bad));
    }
    out.push_back(cb.finish());
  }
  {
    // For an excellent tree of order >= 5: n/5 <= |02| and 3|02| <= 2(n-1),
    // equivalently 4n/5 >= |v_minus| >= (n+2)/3. The lower 02 bound is tight
    // exactly on the pure five-vertex-attachment family; the upper one
    // exactly on the corona family built from the one-edge spine.
    int hi = cap_n(opt, 14, 5, 14);
    ClaimBuilder cb("extremal", "v02_sandwich", hi);
    sweep(cb, opt, collect_trees(5, hi), [](const Graph& t, std::vector<std::string>& bad) {
      PartitionReport rep = partition_report(t);
      if (!rep.excellent) return;
      int n = t.n();
      int s02 = 0;
      for (ValueSet vs : rep.value_sets)
        if (vs == kSet02) ++s02;
      int vm = static_cast<int>(rep.v_minus.size());
      if (vm != n - s02) bad.push_back("v_minus and the 02 class do not partition the tree");
      if (5 * s02 < n) bad.push_back("|02| fell below one fifth of the order");
      if (3 * s02 > 2 * (n - 1)) bad.push_back("3|02| exceeds 2(n-1)");
      if (5 * vm > 4 * n) bad.push_back("|v_minus| exceeds four fifths of the order");
      if (3 * vm < n + 2) bad.push_back("3|v_minus| fell below n+2");
      ClassRecognition full = recognize_r02012(t);
      bool pure_o9 = full.accepted;
      if (pure_o9)
        for (const Step& s : full.cert.steps)
          if (s.op != OpKind::O9) pure_o9 = false;
      if ((5 * s02 == n) != pure_o9)
        bad.push_back("lower 02 equality does not match the pure five-vertex-attachment family");
      ClassRecognition corona = recognize_r0102_corona(t);
      bool pure_o7 = corona.accepted && corona.cert.base == "H2";
      if (pure_o7)
        for (const Step& s : corona.cert.steps)
          if (s.op != OpKind::O7) pure_o7 = false;
      if ((3 * s02 == 2 * (n - 1)) != pure_o7)
        bad.push_back("upper 02 equality does not match the pure path-coalescence family");
    });
    out.push_back(cb.finish());
  }
}

// ---------------------------------------------------------------------------
// cea: graphs saturated for edge addition or vertex removal.
// ---------------------------------------------------------------------------

void suite_cea(const VerifyOptions& opt, std::vector<ClaimResult>& out) {
  {
    // Exactly three trees are saturated for edge addition; they are the
    // catalog entries of orders 2, 9 and 10.
    int hi = cap_n(opt, 12, 2, 12);
    ClaimBuilder cb("cea", "cea_census", hi);
    std::mutex mu;
    std::vector<std::pair<long, Graph>> found;
    std::vector<Graph> items = collect_trees(2, hi);
    parallel_for(opt.jobs, static_cast<int>(items.size()), [&](int i) {
      cb.tally();
      const Graph& t = items[static_cast<size_t>(i)];
      if (is_cea(t)) {
        std::lock_guard<std::mutex> lock(mu);
        found.emplace_back(i, t);
      }
    });
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::set<int> want_orders;
    for (int n : {2, 9, 10})
      if (n <= hi) want_orders.insert(n);
    std::multiset<int> got_orders;
    const Catalog& cat = catalog();
    long key = 0;
    for (const auto& [idx, t] : found) {
      (void)idx;
      got_orders.insert(t.n());
      const CatalogEntry* match = nullptr;
      for (const CatalogEntry& e : cat.entries)
        if (e.tree.n() == t.n() && (e.name == "H1" || e.name == "H9" || e.name == "H10"))
          match = &e;
      std::string sta = derive_statuses(t);
      if (match == nullptr || free_code(t, &sta) != free_code(match->tree, &match->statuses))
        cb.fail(key, failure_json(t, {"saturated tree is not the expected catalog entry"}));
      ++key;
    }
    if (std::multiset<int>(want_orders.begin(), want_orders.end()) != got_orders) {
      Json j;
      j["aspect"] = "saturated trees do not have orders 2, 9, 10 exactly once each";
      std::vector<int> orders(got_orders.begin(), got_orders.end());
      j["orders"] = orders;
      cb.fail(1000000, std::move(j));
    }
    cb.note("the saturated trees coincide with the catalog entries of orders 2, 9 and 10");
    out.push_back(cb.finish());
  }
  {
    // Saturation in either direction forces excellence.
    int hi = cap_n(opt, 6, 2, 7);
    ClaimBuilder cb("cea", "saturation_excellent", hi);
    sweep(cb, opt, collect_connected(2, hi), [](const Graph& g, std::vector<std::string>& bad) {
      if ((is_cvr(g) || is_cea(g)) && !is_excellent(g))
        bad.push_back("saturated but not excellent");
    });
    out.push_back(cb.finish());
  }
  {
    // Greedy completion: adding optimum-preserving edges until none remain
    // ends at a saturated graph with the original optimum; excellence, once
    // gained, is never lost along the way.
    int hi = cap_n(opt, 6, 2, 7);
    ClaimBuilder cb("cea", "cea_completion", hi);
    sweep(cb, opt, collect_connected(2, hi), [](const Graph& g, std::vector<std::string>& bad) {
      int target = gamma_r_auto(g);
      Graph cur = g;
      bool exc = is_excellent(cur);
      for (;;) {
        bool added = false;
        for (int u = 0; u < cur.n() && !added; ++u)
          for (int v = u + 1; v < cur.n() && !added; ++v) {
            if (cur.has_edge(u, v)) continue;
            Graph h = add_edge_copy(cur, u, v);
            if (gamma_r_auto(h) != target) continue;
            bool exc2 = is_excellent(h);
            if (exc && !exc2)
              bad.push_back("an optimum-preserving edge destroyed excellence");
            cur = h;
            exc = exc2;
            added = true;
          }
        if (!added) break;
      }
      if (gamma_r_auto(cur) != target) bad.push_back("completion changed the optimum");
      if (!is_cea(cur)) bad.push_back("completion is not saturated");
      if (!is_excellent(cur)) bad.push_back("completion is not excellent");
    });
    out.push_back(cb.finish());
  }
}

// ---------------------------------------------------------------------------
// minedge: edge-minimum excellent graphs per order.
// ---------------------------------------------------------------------------

void suite_minedge(const VerifyOptions& opt, std::vector<ClaimResult>& out) {
  int hi = cap_n(opt, 7, 2, 7);
  ClaimBuilder cb("minedge", "min_edges", hi);
  for (int n = 2; n <= hi; ++n) {
    std::vector<std::string> bad;
    int min_m = -1;
    std::vector<Graph> achievers;
    for (const Graph& g : connected_graphs(n)) {
      cb.tally();
      if (!is_excellent(g)) continue;
      if (min_m < 0 || g.m() < min_m) {
        min_m = g.m();
        achievers.assign(1, g);
      } else if (g.m() == min_m) {
        achievers.push_back(g);
      }
    }
    int want = n == 3 ? 3 : n - 1;
    if (min_m != want)
      bad.push_back("minimum edge count over excellent graphs is " + std::to_string(min_m) +
                    ", expected " + std::to_string(want));
    if (n == 3) {
      if (achievers.size() != 1 || achievers[0].m() != 3)
        bad.push_back("the order-3 achiever is not the triangle alone");
    } else {
      for (const Graph& g : achievers)
        if (!is_tree(g)) {
          bad.push_back("an edge-minimum achiever is not a tree");
          break;
        }
    }
    if (!bad.empty()) {
      Json j;
      j["n"] = n;
      j["aspects"] = bad;
      cb.fail(n, std::move(j));
    }
  }
  out.push_back(cb.finish());
}

// ---------------------------------------------------------------------------
// mincycle: minimality in the spanning-subgraph order on the excellent
// graphs of a fixed order and optimum.
// ---------------------------------------------------------------------------

void suite_mincycle(const VerifyOptions& opt, std::vector<ClaimResult>& out) {
  {
    // Every cycle is excellent; it is minimal exactly when its length is a
    // multiple of three, where the optimum is two thirds of the order.
    int hi = cap_n(opt, 12, 3, 12);
    ClaimBuilder cb("mincycle", "cycle_minimality", hi);
    for (int n = 3; n <= hi; ++n) {
      cb.tally();
      std::vector<std::string> bad;
      Graph c = cycle_graph(n);
      int gr = gamma_r_auto(c);
      if (gr != (2 * n + 2) / 3) bad.push_back("cycle optimum is not ceil(2n/3)");
      if (!is_excellent(c)) bad.push_back("cycle is not excellent");
      bool minimal = poset_minimal(c);
      if (minimal != (n % 3 == 0))
        bad.push_back("minimal=" + std::to_string(minimal) + " at length " + std::to_string(n));
      if (n % 3 == 0 && gr != 2 * n / 3) bad.push_back("minimal cycle optimum is not 2n/3");
      if (!bad.empty()) cb.fail(n, failure_json(c, bad));
    }
    out.push_back(cb.finish());
  }
  {
    // Complete bipartite graphs missing one edge stay excellent at optimum 4
    // but are never minimal: some single edge always comes out without
    // leaving the class. The removable edge is recorded for each instance.
    ClaimBuilder cb("mincycle", "bipartite_minus_edge", 0);
    long key = 0;
    for (auto [p, q] : std::vector<std::pair<int, int>>{{3, 3}, {4, 3}}) {
      cb.tally();
      std::vector<std::string> bad;
      Graph g = drop_edge(complete_bipartite(p, q), 0, p);
      if (!is_connected(g) || !is_excellent(g)) bad.push_back("not a connected excellent graph");
      if (gamma_r_auto(g) != 4) bad.push_back("optimum is not 4");
      if (poset_minimal(g)) bad.push_back("expected a removable edge, found none");
      for (auto [u, v] : g.edges()) {
        Graph h = drop_edge(g, u, v);
        if (is_connected(h) && gamma_r_auto(h) == 4 && is_excellent(h)) {
          cb.note("K_{" + std::to_string(p) + "," + std::to_string(q) +
                  "} minus one edge: removing (" + std::to_string(u) + "," + std::to_string(v) +
                  ") keeps the graph connected, excellent and at optimum 4");
          break;
        }
      }
      if (!bad.empty()) cb.fail(key, failure_json(g, bad));
      ++key;
    }
    out.push_back(cb.finish());
  }
}

using SuiteFn = void (*)(const VerifyOptions&, std::vector<ClaimResult>&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"oracle", suite_oracle},       {"lemmas", suite_lemmas},
      {"theorem-main", suite_theorem_main}, {"classes", suite_classes},
      {"extremal", suite_extremal},   {"cea", suite_cea},
      {"minedge", suite_minedge},     {"mincycle", suite_mincycle},
  };
  return table;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : suite_table()) names.push_back(name);
  names.push_back("all");
  return names;
}

bool is_verify_suite(const std::string& name) {
  if (name == "all") return true;
  for (const auto& [candidate, fn] : suite_table())
    if (candidate == name) return true;
  return false;
}

std::vector<ClaimResult> run_verify_suite(const std::string& suite, const VerifyOptions& opt) {
  std::vector<ClaimResult> out;
  bool matched = false;
  for (const auto& [name, fn] : suite_table())
    if (suite == "all" || suite == name) {
      fn(opt, out);
      matched = true;
    }
  if (!matched) throw std::invalid_argument("unknown verification suite: " + suite);
  return out;
}

Json claim_json(const ClaimResult& r) {
  Json j;
  j["suite"] = r.suite;
  j["claim"] = r.claim;
  j["max_n"] = r.max_n;
  j["instances"] = r.instances;
  j["failures"] = r.failures;
  j["seconds"] = r.seconds;
  j["notes"] = r.notes;
  j["counterexamples"] = r.counterexamples;
  return j;
}

std::string claim_csv_header() { return "suite,claim,n,instances,failures,seconds"; }

std::string claim_csv_row(const ClaimResult& r) {
  char seconds[32];
  std::snprintf(seconds, sizeof seconds, "%.3f", r.seconds);
  return r.suite + "," + r.claim + "," + std::to_string(r.max_n) + "," +
         std::to_string(r.instances) + "," + std::to_string(r.failures) + "," + seconds;
}

}  // namespace rdx
