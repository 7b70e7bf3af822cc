// alcove: galleries, crystals, quiver polytopes and oracle tables as JSON/DOT/SVG.
//
// Exit codes: 0 ok, 1 other error, 2 invalid input, 3 budget exceeded,
// 4 method precondition failed.

#include "CLI11.hpp"

#include "alcove/crystal.hpp"
#include "alcove/errors.hpp"
#include "alcove/json_io.hpp"
#include "alcove/svg.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace alcove;

namespace {

struct WeightFlags {
  std::string type = "A";
  int rank = 0;
  std::vector<long long> coweight;
};

void add_weight_flags(CLI::App* cmd, WeightFlags& w)
{
  cmd->add_option("--type", w.type, "Cartan type (A only)")->default_val("A");
  cmd->add_option("--rank", w.rank, "rank r")->required();
  cmd->add_option("--coweight", w.coweight, "fundamental-coweight coordinates c1,...,cr")->required()->delimiter(',');
}

RootSystem root_system(const WeightFlags& w)
{
  if (w.type != "A") throw InvalidInput("only type A is supported");
  if (w.rank < 1 || w.rank > 6) throw InvalidInput("rank must be between 1 and 6");
  return RootSystem::type_a(w.rank);
}

LatticeVector coweight(const WeightFlags& w)
{
  if (static_cast<int>(w.coweight.size()) != w.rank) throw InvalidInput("coweight needs one coordinate per rank");
  return LatticeVector::coweight(w.coweight);
}

std::size_t budget()
{
  const char* env = std::getenv("ALCOVE_BUDGET");
  if (!env) return 1000000;
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(env, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || env[pos] != '\0' || v == 0) throw InvalidInput("ALCOVE_BUDGET must be a positive integer");
  return v;
}

Json read_json(const std::string& path)
{
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text)
{
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string key(const std::vector<long long>& w)
{
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Galleries, crystals and MV polytopes"};
  app.require_subcommand(1);
  int jobs = 0;
  app.add_option("--jobs", jobs, "worker threads for enumeration (0 = all)");

  WeightFlags gw;
  bool ls = false, count_only = false;
  std::vector<long long> only_weight;
  std::string gallery_svg_path;
  auto* gallery_cmd = app.add_subcommand("gallery", "galleries of the type of the based gallery");
  add_weight_flags(gallery_cmd, gw);
  gallery_cmd->add_flag("--ls", ls, "keep LS galleries only");
  gallery_cmd->add_option("--weight", only_weight, "restrict to one weight")->delimiter(',');
  gallery_cmd->add_flag("--count-only", count_only, "print the weight histogram only");
  gallery_cmd->add_option("--svg", gallery_svg_path, "draw the based gallery (rank 2)");

  WeightFlags cw;
  std::string format = "json";
  auto* crystal_cmd = app.add_subcommand("crystal", "crystal graph generated by the based gallery");
  add_weight_flags(crystal_cmd, cw);
  crystal_cmd->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  std::vector<std::string> maya;
  std::string module_path, method = "coordinate";
  int prime = 2;
  bool want_pol = false;
  auto* quiver_cmd = app.add_subcommand("quiver", "submodule dimension vectors and Pol");
  auto* maya_opt = quiver_cmd->add_option("--maya", maya, "n and the set, e.g. --maya 5 2,4,5")->expected(2);
  auto* module_opt = quiver_cmd->add_option("--module", module_path, "module JSON file");
  maya_opt->excludes(module_opt);
  quiver_cmd->add_flag("--pol", want_pol, "also print the polytope");
  quiver_cmd->add_option("--method", method, "coordinate or exhaustive")->check(CLI::IsMember({"coordinate", "exhaustive"}));
  quiver_cmd->add_option("--prime", prime, "field size for the exhaustive method");

  std::vector<std::string> mink, union_files;
  bool primitive = false;
  std::string poly_svg_path;
  auto* poly_cmd = app.add_subcommand("polytope", "polytope arithmetic");
  auto* mink_opt = poly_cmd->add_option("--minkowski", mink, "two polytope JSON files")->expected(2);
  auto* prim_opt = poly_cmd->add_flag("--primitive-a2", primitive, "the four primitive A2 polytopes");
  auto* union_opt = poly_cmd->add_option("--union-check", union_files, "part files followed by the whole")->expected(2, 4);
  mink_opt->excludes(prim_opt)->excludes(union_opt);
  prim_opt->excludes(union_opt);
  poly_cmd->add_option("--svg", poly_svg_path, "write a picture of the result (rank 2)");

  WeightFlags ow;
  auto* oracle_cmd = app.add_subcommand("oracle", "Weyl dimension and Freudenthal multiplicities");
  add_weight_flags(oracle_cmd, ow);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gallery_cmd) {
      const AffineComplex ac(root_system(gw));
      const LatticeVector lambda = coweight(gw);
      const Gallery gamma = minimal_gallery(ac, lambda);
      if (!gallery_svg_path.empty()) write_file(gallery_svg_path, gallery_svg(ac, gamma));
      if (!only_weight.empty() && static_cast<int>(only_weight.size()) != gw.rank)
        throw InvalidInput("--weight needs one coordinate per rank");
      if (count_only) {
        auto hist = ls ? ls_histogram(ac, gamma, budget(), jobs) : type_histogram(ac, gamma, budget(), jobs);
        if (!only_weight.empty())
          std::erase_if(hist, [&](const WeightCount& w) { return w.weight != only_weight; });
        std::cout << to_json(hist).dump(2) << "\n";
        return 0;
      }
      const auto galleries = ls ? enumerate_ls(ac, gamma, budget(), jobs) : enumerate_same_type(ac, gamma, budget());
      Json list = Json::array();
      for (const Gallery& g : galleries) {
        const auto w = ac.roots().to_coweight(weight(ac, g));
        if (!only_weight.empty() && w != only_weight) continue;
        Json j = to_json(g);
        j["weight"] = w;
        j["dim"] = gallery_dim(ac, g);
        j["ls"] = ls || is_ls(ac, g, gamma);
        list.push_back(j);
      }
      std::cout << Json{{"based", to_json(gamma)}, {"galleries", list}}.dump(2) << "\n";
    } else if (*crystal_cmd) {
      const AffineComplex ac(root_system(cw));
      const CrystalGraph g = generate_crystal(ac, minimal_gallery(ac, coweight(cw)), budget());
      if (format == "dot") std::cout << to_dot(g);
      else std::cout << to_json(g).dump(2) << "\n";
    } else if (*quiver_cmd) {
      QuiverModule m;
      if (!maya.empty()) {
        std::vector<int> set;
        std::stringstream ss(maya[1]);
        std::string tok;
        try {
          while (std::getline(ss, tok, ',')) set.push_back(std::stoi(tok));
          m = maya_module(std::stoi(maya[0]), set);
        } catch (const std::logic_error& e) {
          if (dynamic_cast<const InvalidInput*>(&e)) throw;
          throw InvalidInput("malformed --maya arguments");
        }
      } else if (!module_path.empty()) {
        m = module_from_json(read_json(module_path));
      } else {
        throw InvalidInput("quiver needs --maya or --module");
      }
      SubmoduleOptions opt;
      opt.method = method == "exhaustive" ? SubmoduleMethod::exhaustive : SubmoduleMethod::coordinate;
      opt.prime = prime;
      opt.budget = budget();
      opt.jobs = jobs;
      const DimVectorSet dv = submodule_dim_vectors(m, opt);
      Json out = {{"module", to_json(m)}, {"dims", m.dims}, {"preprojective", verify_preprojective(m)},
                  {"dim_vectors", Json(std::vector<std::vector<int>>(dv.begin(), dv.end()))}};
      if (want_pol) out["polytope"] = to_json(pol(m, opt));
      std::cout << out.dump(2) << "\n";
    } else if (*poly_cmd) {
      const RootSystem a2 = RootSystem::type_a(2);
      std::vector<LatticePolytope> drawn;
      Json out;
      if (!mink.empty()) {
        const auto sum = minkowski_sum(polytope_from_json(read_json(mink[0])), polytope_from_json(read_json(mink[1])));
        out = to_json(sum);
        drawn.push_back(sum);
      } else if (primitive) {
        out = Json::object();
        for (const auto& [name, p] : primitive_a2()) {
          out[name] = to_json(p);
          drawn.push_back(p);
        }
      } else if (!union_files.empty()) {
        std::vector<LatticePolytope> parts;
        for (const auto& f : union_files) parts.push_back(polytope_from_json(read_json(f)));
        const LatticePolytope whole = parts.back();
        parts.pop_back();
        out = {{"union_equals", union_equals(parts, whole)}};
        drawn = parts;
      } else {
        throw InvalidInput("polytope needs --minkowski, --primitive-a2 or --union-check");
      }
      if (!poly_svg_path.empty()) {
        if (drawn.empty() || drawn.front().ambient_rank() != 2) throw InvalidInput("pictures are drawn for rank 2 only");
        write_file(poly_svg_path, polytopes_svg(a2, drawn));
      }
      std::cout << out.dump(2) << "\n";
    } else if (*oracle_cmd) {
      const RootSystem rs = root_system(ow);
      const LatticeVector lambda = coweight(ow);
      Json mult = Json::object();
      for (const auto& [w, n] : weight_multiplicities(lambda, rs)) mult[key(w)] = n;
      std::cout << Json{{"dim", weyl_dim(lambda, rs)}, {"multiplicities", mult}}.dump(2) << "\n";
    }
  } catch (const InvalidInput& e) {
    std::cerr << "alcove: invalid input: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "alcove: budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const MethodPrecondition& e) {
    std::cerr << "alcove: method precondition: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "alcove: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
