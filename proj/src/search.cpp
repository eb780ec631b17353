// Backtracking search for morphisms between composition tables.
//
// Images are chosen only for a generating sequence g_1, ..., g_k of the source.
// Level i assigns g_i; the elements of <g_1..g_i> not in <g_1..g_{i-1}> get
// forced images phi(x g) = phi(x) phi(g), and every other product x g with x in
// <g_1..g_i>, g in {g_1..g_i} that was not checked at an earlier level is
// checked. That is exactly the condition for phi to be a morphism on
// <g_1..g_i>, so a full assignment surviving all levels is a morphism.
//
// The tree is split by the image of g_1 into one partition per target element.
// Partitions run independently (possibly on several threads), each capped at
// the whole node budget, and are merged in partition order as if they had run
// one after another on a shared counter. Hence results, node counts and
// verdicts never depend on the number of workers.

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include "generated.hpp"
#include "semiwork/morphism.hpp"

namespace semiwork {

  namespace {
    constexpr Index npos = std::numeric_limits<Index>::max();

    struct Op {
      Index x;
      Index g;
      Index product;
      bool  defines;
    };

    struct Level {
      Index           gen;
      std::vector<Op> ops;
    };

    std::vector<Level> make_plan(CayleyTable const& s) {
      auto const         gens = greedy_generators(s);
      std::vector<Level> levels;
      std::vector<char>  in(s.order(), 0);
      std::vector<Index> members;
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Level lvl{gens[k], {}};
        auto  visit = [&](Index x, Index g) {
          Index const p       = s(x, g);
          bool const  defines = !in[p];
          if (defines) {
            in[p] = 1;
            members.push_back(p);
          }
          lvl.ops.push_back({x, g, p, defines});
        };
        std::size_t const old = members.size();
        in[gens[k]]           = 1;
        members.push_back(gens[k]);
        for (std::size_t i = 0; i < old; ++i) {
          visit(members[i], gens[k]);
        }
        for (std::size_t i = old; i < members.size(); ++i) {
          for (std::size_t h = 0; h <= k; ++h) {
            visit(members[i], gens[h]);
          }
        }
        levels.push_back(std::move(lvl));
      }
      return levels;
    }

    struct Partition {
      std::vector<std::vector<Index>> maps;
      std::vector<std::uint64_t>      nodes_at;  // node count when maps[i] was found
      std::uint64_t                   nodes     = 0;
      bool                            exhausted = false;
    };

    class Searcher {
     public:
      Searcher(CayleyTable const&        s,
               CayleyTable const&        t,
               std::vector<Level> const& plan,
               bool                      injective,
               bool                      surjective,
               std::size_t               limit,
               std::uint64_t             cap,
               std::atomic<bool> const&  cancel)
          : _s(s),
            _t(t),
            _plan(plan),
            _injective(injective),
            _surjective(surjective),
            _limit(limit),
            _cap(cap),
            _cancel(cancel),
            _phi(s.order(), npos),
            _used(t.order(), 0) {}

      Partition run(Index first_image) {
        _out  = Partition{};
        _stop = false;
        if (tick()) {
          std::vector<Index> defined;
          if (assign(0, first_image, defined)) {
            descend(1);
          }
          undo(defined);
        }
        return std::move(_out);
      }

     private:
      // Counts a node; false when the search must stop.
      bool tick() {
        if (_stop) {
          return false;
        }
        if (++_out.nodes > _cap) {
          _out.exhausted = true;
          _stop          = true;
          return false;
        }
        if (_cancel.load(std::memory_order_relaxed)) {
          _stop = true;
          return false;
        }
        return true;
      }

      bool set(Index x, Index v, std::vector<Index>& defined) {
        if (_injective && _used[v]) {
          return false;
        }
        _phi[x] = v;
        _used[v]++;
        defined.push_back(x);
        return true;
      }

      bool assign(std::size_t level, Index image, std::vector<Index>& defined) {
        auto const& lvl = _plan[level];
        if (!set(lvl.gen, image, defined)) {
          return false;
        }
        for (auto const& op : lvl.ops) {
          Index const v = _t(_phi[op.x], _phi[op.g]);
          if (op.defines) {
            if (!set(op.product, v, defined)) {
              return false;
            }
          } else if (_phi[op.product] != v) {
            return false;
          }
        }
        return true;
      }

      void undo(std::vector<Index> const& defined) {
        for (Index x : defined) {
          _used[_phi[x]]--;
          _phi[x] = npos;
        }
      }

      void descend(std::size_t level) {
        if (level == _plan.size()) {
          record();
          return;
        }
        std::vector<Index> defined;
        for (Index c = 0; c < _t.order() && !_stop; ++c) {
          if (!tick()) {
            return;
          }
          if (assign(level, c, defined)) {
            descend(level + 1);
          }
          undo(defined);
          defined.clear();
        }
      }

      void record() {
        if (_surjective
            && std::any_of(_used.begin(), _used.end(), [](auto u) { return u == 0; })) {
          return;
        }
        _out.maps.push_back(_phi);
        _out.nodes_at.push_back(_out.nodes);
        if (_limit != 0 && _out.maps.size() >= _limit) {
          _stop = true;
        }
      }

      CayleyTable const&        _s;
      CayleyTable const&        _t;
      std::vector<Level> const& _plan;
      bool                      _injective;
      bool                      _surjective;
      std::size_t               _limit;
      std::uint64_t             _cap;
      std::atomic<bool> const&  _cancel;
      std::vector<Index>        _phi;
      std::vector<std::uint32_t> _used;
      Partition                 _out;
      bool                      _stop = false;
    };

    // Sequential-equivalent accounting over partitions taken in order.
    struct Merger {
      std::size_t                     limit;
      std::uint64_t                   budget;
      std::uint64_t                   spent    = 0;
      bool                            decided  = false;
      bool                            complete = true;
      std::vector<std::vector<Index>> found;

      void add(Partition& p) {
        if (decided) {
          return;
        }
        std::uint64_t const remaining = budget - spent;
        for (std::size_t i = 0; i < p.maps.size(); ++i) {
          if (p.nodes_at[i] > remaining) {
            return give_up();
          }
          found.push_back(std::move(p.maps[i]));
          if (limit != 0 && found.size() >= limit) {
            decided = true;
            spent += p.nodes_at[i];
            return;
          }
        }
        if (p.exhausted || p.nodes > remaining) {
          return give_up();
        }
        spent += p.nodes;
      }

      void give_up() {
        decided  = true;
        complete = false;
        spent    = budget;
      }
    };

    MorphismSearch search(CayleyTable const&   s,
                          CayleyTable const&   t,
                          bool                 injective,
                          bool                 surjective,
                          SearchOptions const& opts) {
      if ((injective && s.order() > t.order())
          || (surjective && t.order() > s.order())) {
        return {{}, true, 0};
      }
      auto const        plan  = make_plan(s);
      std::size_t const parts = t.order();

      std::vector<Partition> results(parts);
      std::vector<char>      done(parts, 0);
      std::atomic<bool>      cancel{false};
      std::atomic<Index>     next{0};
      std::mutex             mtx;
      Merger                 merger{opts.limit, opts.budget.max_nodes, 0, false, true, {}};
      std::size_t            merged = 0;

      auto worker = [&] {
        Searcher searcher(s, t, plan, injective, surjective, opts.limit,
                          opts.budget.max_nodes, cancel);
        for (Index c = next++; c < parts && !cancel.load(); c = next++) {
          Partition p = searcher.run(c);
          std::lock_guard lock(mtx);
          results[c] = std::move(p);
          done[c]    = 1;
          while (merged < parts && done[merged] && !merger.decided) {
            merger.add(results[merged]);
            results[merged] = Partition{};
            ++merged;
          }
          if (merger.decided) {
            cancel = true;
          }
        }
      };

      unsigned const threads
          = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, opts.workers), parts));
      std::vector<std::thread> pool;
      for (unsigned i = 1; i < threads; ++i) {
        pool.emplace_back(worker);
      }
      worker();
      for (auto& th : pool) {
        th.join();
      }

      std::sort(merger.found.begin(), merger.found.end());
      MorphismSearch out{{}, merger.complete, merger.spent};
      out.found.reserve(merger.found.size());
      for (auto& m : merger.found) {
        out.found.push_back(Morphism{s, t, std::move(m)});
      }
      return out;
    }
  }  // namespace

  MorphismSearch find_embeddings(CayleyTable const&   source,
                                 CayleyTable const&   target,
                                 SearchOptions const& opts) {
    return search(source, target, true, false, opts);
  }

  MorphismSearch find_morphisms(CayleyTable const&   source,
                                CayleyTable const&   target,
                                bool                 require_surjective,
                                SearchOptions const& opts) {
    return search(source, target, false, require_surjective, opts);
  }

}  // namespace semiwork
