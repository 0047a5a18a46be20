#include "toriclci/corpus.hpp"

#include <sstream>

namespace toriclci {

FreeParamMatrix example_fig2() { return make_free_params(3, {{2}, {2, 1}}); }

FreeParamMatrix example_fig3() { return make_free_params(4, {{1}, {1, 0}, {2, -1, -1}}); }

FreeParamMatrix example_triangle(const Int& k) {
  return make_free_params(3, {{k}, {k, -1}});
}

FreeParamMatrix example_simplex(int d, const Int& k) {
  std::vector<std::vector<Int>> rows;
  for (int i = 1; i <= d - 1; ++i) {
    std::vector<Int> row(static_cast<std::size_t>(i), Int(0));
    row[static_cast<std::size_t>(i - 1)] = i == 1 ? k : Int(1);
    rows.push_back(std::move(row));
  }
  return make_free_params(d, std::move(rows));
}

FreeParamMatrix example_box(const std::vector<Int>& ks) {
  std::vector<std::vector<Int>> rows;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    std::vector<Int> row(i + 1, Int(0));
    row[0] = ks[i];
    rows.push_back(std::move(row));
  }
  return make_free_params(static_cast<int>(ks.size()) + 1, std::move(rows));
}

FreeParamMatrix example_smooth3() { return make_free_params(3, {{1}, {0, 1}}); }

namespace {

// "name(arg,arg)" -> name + integer args; plain "name" has no args.
bool split_name(const std::string& s, std::string& name, std::vector<Int>& args) {
  auto open = s.find('(');
  if (open == std::string::npos) {
    name = s;
    return true;
  }
  if (s.back() != ')') return false;
  name = s.substr(0, open);
  std::string inner = s.substr(open + 1, s.size() - open - 2);
  std::stringstream ss(inner);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    try {
      args.emplace_back(tok);
    } catch (const std::invalid_argument&) {
      return false;
    }
  }
  return !args.empty();
}

}  // namespace

std::optional<FreeParamMatrix> example_by_name(const std::string& spec) {
  std::string name;
  std::vector<Int> args;
  if (!split_name(spec, name, args)) return std::nullopt;

  if (name == "fig2" && args.empty()) return example_fig2();
  if (name == "fig3" && args.empty()) return example_fig3();
  if (name == "smooth3" && args.empty()) return example_smooth3();
  if (name == "triangle" && args.size() == 1) return example_triangle(args[0]);
  if (name == "simplex" && args.size() == 2 && args[0].fits_sint_p() && args[0] >= 2)
    return example_simplex(static_cast<int>(args[0].get_si()), args[1]);
  if (name == "box" && !args.empty()) return example_box(args);
  return std::nullopt;
}

std::string example_catalog() {
  return "  fig2                singular quadrilateral cone, d=3\n"
         "  fig3                the d=4 solid with a redundant variable\n"
         "  triangle(k)         Nakajima triangle, d=3\n"
         "  simplex(d,k)        k-fold dilated basic simplex\n"
         "  box(k1,...,kn)      rectangular parallelepiped, d=n+1\n"
         "  smooth3             basic 2-simplex (smooth case), d=3\n";
}

}  // namespace toriclci
