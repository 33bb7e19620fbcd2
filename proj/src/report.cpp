#include "isw/report.hpp"

#include <sstream>

#include "isw/centrality.hpp"
#include "isw/conjugation.hpp"
#include "isw/errors.hpp"
#include "isw/series.hpp"

namespace isw {

namespace {

io::json skipped(const error& e) {
  io::json j;
  j["skipped"] = e.code();
  j["detail"] = e.what();
  return j;
}

// Runs a field computation, mapping budget/guard refusals to a skip marker.
template <typename F>
io::json guarded(F&& f) {
  try {
    return f();
  } catch (const budget_exceeded& e) {
    return skipped(e);
  } catch (const order_too_large& e) {
    return skipped(e);
  } catch (const level_too_large& e) {
    return skipped(e);
  }
}

} // namespace

io::json analyze_semigroup(const InverseSemigroup& s, const AnalyzeOptions& opts) {
  io::json j;
  j["schema_version"] = 1;
  j["name"] = s.name();
  j["order"] = s.order();
  j["idempotents"] = s.idempotents();

  GreenRelations green = green_relations(s);
  io::json gj;
  gj["l_classes"] = green.l.block_count();
  gj["r_classes"] = green.r.block_count();
  gj["h_classes"] = green.h.block_count();
  j["green"] = std::move(gj);

  j["metacenter"] = metacenter(s).members();
  j["classical_center"] = classical_center(s).members();
  j["clifford"] = is_clifford(s);

  j["congruence_count"] = guarded([&]() -> io::json {
    return enumerate_congruences(s, opts.enumeration_guard).size();
  });

  j["center_congruence"] = guarded([&]() -> io::json {
    return io::congruence_to_json(
        center_congruence(s, opts.budget, opts.mode, opts.enumeration_guard));
  });

  j["nilpotent"] = guarded([&]() -> io::json {
    NilpotenceResult r = is_nilpotent(s, opts.budget, opts.mode, opts.enumeration_guard);
    io::json o;
    o["value"] = r.nilpotent;
    if (r.clazz)
      o["class"] = *r.clazz;
    else
      o["class"] = nullptr;
    return o;
  });

  j["solvable"] = guarded([&]() -> io::json {
    SolvabilityResult r = is_solvable(s, opts.budget, opts.mode, opts.enumeration_guard);
    io::json o;
    o["value"] = r.solvable;
    if (r.length)
      o["length"] = *r.length;
    else
      o["length"] = nullptr;
    return o;
  });

  j["malcev_class"] = guarded([&]() -> io::json {
    auto cls = malcev_class(s, opts.max_n, opts.budget, opts.mode);
    io::json o;
    o["bound"] = opts.max_n;
    if (cls)
      o["value"] = *cls;
    else
      o["value"] = nullptr;
    return o;
  });

  io::json conj = io::json::array();
  for (int n = 0; n <= opts.max_n; ++n) {
    io::json row;
    row["n"] = n;
    io::json verdict = guarded([&]() -> io::json {
      ConjectureResult r =
          conjecture_check(s, n, opts.budget, opts.mode, opts.enumeration_guard);
      io::json o;
      o["holds"] = r.holds;
      if (r.witness) o["witness"] = io::json::array({r.witness->first, r.witness->second});
      return o;
    });
    row["result"] = std::move(verdict);
    conj.push_back(std::move(row));
  }
  j["conjecture"] = std::move(conj);
  return j;
}

namespace {

std::string field_text(const io::json& v) {
  if (v.is_object() && v.contains("skipped"))
    return "skipped (" + v.at("skipped").get<std::string>() + ")";
  return v.dump();
}

} // namespace

std::string render_report_text(const io::json& r) {
  std::ostringstream out;
  out << "semigroup: " << r.at("name").get<std::string>() << "\n";
  out << "order: " << r.at("order") << ", idempotents: " << r.at("idempotents").size() << "\n";
  const auto& g = r.at("green");
  out << "green classes: L=" << g.at("l_classes") << " R=" << g.at("r_classes")
      << " H=" << g.at("h_classes") << "\n";
  out << "metacenter Z(S): " << r.at("metacenter").dump() << "\n";
  out << "classical center C(S): " << r.at("classical_center").dump() << "\n";
  out << "clifford: " << (r.at("clifford").get<bool>() ? "yes" : "no") << "\n";
  out << "congruences: " << field_text(r.at("congruence_count")) << "\n";
  out << "center congruence: " << field_text(r.at("center_congruence")) << "\n";
  out << "nilpotent: " << field_text(r.at("nilpotent")) << "\n";
  out << "solvable: " << field_text(r.at("solvable")) << "\n";
  out << "malcev class: " << field_text(r.at("malcev_class")) << "\n";
  out << "conjecture zeta_n = H & mu_n:\n";
  for (const auto& row : r.at("conjecture"))
    out << "  n=" << row.at("n") << ": " << field_text(row.at("result")) << "\n";
  return out.str();
}

} // namespace isw
