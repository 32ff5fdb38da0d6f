#pragma once

#include "padicrep/report.hpp"
#include "padicrep/tree.hpp"

#include <functional>
#include <map>
#include <vector>

namespace padicrep {

// Machine-checkable statement keyed to a stable identifier: a predicate over
// (p, r) guarded by congruence hypotheses. Checks recompute everything from
// the subspace/module primitives and never trust each other's conclusions.
struct CheckId {
    std::string id;
    std::string hypothesis; // human-readable precondition description
    std::function<bool(u32 p, u64 r)> applies;
    std::function<CheckReport(u32 p, u64 r)> run; // called only when applies()
};

class TheoremRegistry {
  public:
    static const TheoremRegistry& instance();

    std::vector<std::string> ids() const;
    bool has(const std::string& id) const;
    const CheckId& get(const std::string& id) const;

    CheckReport verify(const std::string& id, u32 p, u64 r) const;
    std::vector<CheckReport> sweep(const std::string& id, u32 p, u64 r_lo, u64 r_hi,
                                   u32 jobs = 1) const;

    // the statements the registry promises to cover (completeness manifest)
    static const std::vector<std::string>& manifest();

  private:
    TheoremRegistry();
    void add(CheckId c);
    void register_groundwork();
    void register_section3();
    void register_section4();
    void register_qprops();
    void register_hecke_backed();
    std::map<std::string, CheckId> checks_;
    std::vector<std::string> order_;
};

// Default slope used when a registry check needs the Hecke layer.
SlopeParam default_slope(u32 p, u32 prec = 16);

} // namespace padicrep
