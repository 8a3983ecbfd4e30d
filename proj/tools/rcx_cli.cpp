// Command line front end; talks to the library only through rcx.h.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "rcx/rcx.h"

namespace {

struct Failure {
  rcx_status status;
};

void check(rcx_status status) {
  if (status != RCX_OK) throw Failure{status};
}

struct ComplexDeleter {
  void operator()(rcx_complex* s) const { rcx_complex_free(s); }
};
using ComplexPtr = std::unique_ptr<rcx_complex, ComplexDeleter>;

struct StringDeleter {
  void operator()(char* s) const { rcx_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

ComplexPtr load(const std::string& path) {
  rcx_complex* s = nullptr;
  check(rcx_complex_read_file(path.c_str(), &s));
  return ComplexPtr(s);
}

ComplexPtr subdivide(ComplexPtr s, unsigned rounds) {
  if (rounds == 0) return s;
  rcx_complex* out = nullptr;
  check(rcx_subdivide(s.get(), rounds, &out));
  return ComplexPtr(out);
}

void emit(const rcx_complex* s, const std::string& path) {
  if (!path.empty() && path != "-") {
    check(rcx_complex_write_file(s, path.c_str()));
    return;
  }
  char* text = nullptr;
  check(rcx_complex_format(s, &text));
  StringPtr owned(text);
  std::cout << text;
}

std::string fraction(const rcx_rational& r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

const char* yes_no(int x) { return x ? "yes" : "no"; }

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << '\n';
    throw Failure{RCX_ERR_IO};
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite 2-complexes and Linial-Meshulam random complexes"};
  app.require_subcommand(1);

  // sample
  auto* sample = app.add_subcommand("sample", "Sample Y(n, p) and print it");
  std::uint32_t sample_n = 0;
  double sample_p = 0;
  std::uint64_t sample_seed = 0;
  std::string sample_out;
  sample->add_option("--n", sample_n, "Number of vertices")->required();
  sample->add_option("--p", sample_p, "Face probability")->required();
  sample->add_option("--seed", sample_seed, "Seed")->required();
  sample->add_option("-o,--out", sample_out, "Output file (default stdout)");

  // catalog
  auto* catalog = app.add_subcommand("catalog", "Print a catalog complex");
  std::string catalog_name;
  std::vector<std::int64_t> catalog_params;
  bool catalog_list = false;
  catalog->add_option("name", catalog_name, "Catalog name");
  catalog->add_option("params", catalog_params, "Integer parameters");
  catalog->add_flag("--list", catalog_list, "List catalog names");

  // density
  auto* density = app.add_subcommand("density", "Report mu, mu~ and balancedness");
  std::string density_file;
  unsigned density_rounds = 0;
  bool density_oracle = false;
  bool density_witness = false;
  density->add_option("file", density_file, "Complex file")->required();
  density->add_option("--subdivide", density_rounds, "Center subdivisions applied first");
  density->add_flag("--oracle", density_oracle, "Also run the exhaustive oracle");
  density->add_flag("--witness", density_witness, "Print the minimizing face set");

  // collapse
  auto* collapse = app.add_subcommand("collapse", "Collapse to a graph or a closed core");
  std::string collapse_file, collapse_core;
  collapse->add_option("file", collapse_file, "Complex file")->required();
  collapse->add_option("--core", collapse_core, "Write the final complex here");

  // embed
  auto* embed = app.add_subcommand("embed", "Search immersions or embeddings");
  std::string embed_pattern, embed_host, embed_mode = "embedding";
  unsigned embed_rounds = 0;
  embed->add_option("--pattern", embed_pattern, "Pattern complex file")->required();
  embed->add_option("--host", embed_host, "Host complex file")->required();
  embed->add_option("--mode", embed_mode, "immersion | embedding | count")
      ->check(CLI::IsMember({"immersion", "embedding", "count"}));
  embed->add_option("--subdivide", embed_rounds, "Center subdivisions of the pattern");

  // homology
  auto* homology = app.add_subcommand("homology", "Betti numbers, torsion, chi");
  std::string homology_file;
  homology->add_option("file", homology_file, "Complex file")->required();

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Run a Monte Carlo experiment");
  std::string config_path;
  experiment->add_option("--config", config_path, "key = value config file");
  const std::vector<std::string> keys = {"name", "n",    "c",   "p",   "alpha",  "trials",
                                         "seed", "pattern", "mode", "out", "threads"};
  std::vector<std::string> values(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    experiment->add_option("--" + keys[i], values[i], "Overrides the config key " + keys[i]);

  CLI11_PARSE(app, argc, argv);

  try {
    if (sample->parsed()) {
      rcx_complex* s = nullptr;
      check(rcx_sample(sample_n, sample_p, sample_seed, &s));
      ComplexPtr owned(s);
      emit(s, sample_out);
    } else if (catalog->parsed()) {
      if (catalog_list || catalog_name.empty()) {
        char* names = nullptr;
        check(rcx_catalog_names(&names));
        StringPtr owned(names);
        std::cout << names;
        return 0;
      }
      rcx_complex* s = nullptr;
      check(rcx_catalog(catalog_name.c_str(), catalog_params.data(), catalog_params.size(), &s));
      ComplexPtr owned(s);
      emit(s, "");
    } else if (density->parsed()) {
      auto s = subdivide(load(density_file), density_rounds);
      rcx_density_report report{};
      rcx_complex* witness = nullptr;
      check(rcx_density(s.get(), &report, density_witness ? &witness : nullptr));
      ComplexPtr owned(witness);
      std::size_t v = 0, e = 0, f = 0;
      check(rcx_complex_counts(s.get(), &v, &e, &f));
      std::string oracle_field;
      if (density_oracle) {
        rcx_rational oracle{};
        check(rcx_mu_tilde_oracle(s.get(), &oracle));
        oracle_field = fraction(oracle);
      }
      std::cout << "v,e,f,mu,mu_tilde,balanced,sign,witness_faces,mu_tilde_oracle\n"
                << v << ',' << e << ',' << f << ',' << fraction(report.mu) << ','
                << fraction(report.mu_tilde) << ',' << report.balanced << ',' << report.sign << ','
                << report.witness_faces << ',' << oracle_field << '\n';
      if (witness) {
        std::cout << "# witness\n";
        emit(witness, "");
      }
    } else if (collapse->parsed()) {
      auto s = load(collapse_file);
      rcx_collapse_result result{};
      rcx_complex* core = nullptr;
      check(rcx_collapse(s.get(), &result, &core));
      ComplexPtr owned(core);
      std::cout << "kind,steps,chi,euler_preserved,core_faces\n"
                << (result.kind == RCX_COLLAPSE_GRAPH ? "graph" : "closed_core") << ','
                << result.steps << ',' << result.chi << ',' << result.euler_preserved << ','
                << result.core_faces << '\n';
      if (!collapse_core.empty()) emit(core, collapse_core);
    } else if (embed->parsed()) {
      auto pattern = subdivide(load(embed_pattern), embed_rounds);
      auto host = load(embed_host);
      if (embed_mode == "count") {
        std::uint64_t count = 0;
        check(rcx_count_embeddings(pattern.get(), host.get(), &count));
        std::cout << "count " << count << '\n';
      } else {
        std::size_t v = 0;
        check(rcx_complex_counts(pattern.get(), &v, nullptr, nullptr));
        std::vector<std::uint32_t> pairs(2 * v);
        int found = 0;
        std::size_t written = 0;
        const auto kind = embed_mode == "immersion" ? RCX_MAP_IMMERSION : RCX_MAP_EMBEDDING;
        check(rcx_find_map(pattern.get(), host.get(), kind, &found, pairs.data(), v, &written));
        std::cout << "mode " << embed_mode << "\nfound " << yes_no(found) << '\n';
        for (std::size_t i = 0; i < written; ++i)
          std::cout << "map " << pairs[2 * i] << ' ' << pairs[2 * i + 1] << '\n';
      }
    } else if (homology->parsed()) {
      auto s = load(homology_file);
      rcx_homology h{};
      std::vector<std::int64_t> torsion(64);
      check(rcx_homology_profile(s.get(), &h, torsion.data(), torsion.size()));
      if (h.torsion_count > torsion.size()) {
        torsion.resize(h.torsion_count);
        check(rcx_homology_profile(s.get(), &h, torsion.data(), torsion.size()));
      }
      std::cout << "b0 " << h.b0 << "\nb1 " << h.b1 << "\nb2 " << h.b2 << "\nb0_mod2 "
                << h.b0_mod2 << "\nb1_mod2 " << h.b1_mod2 << "\nb2_mod2 " << h.b2_mod2
                << "\ntorsion";
      for (std::size_t i = 0; i < h.torsion_count; ++i) std::cout << ' ' << torsion[i];
      std::cout << "\nchi " << h.chi << '\n';
      int orientable = 0;
      if (rcx_is_orientable_surface(s.get(), &orientable) == RCX_OK)
        std::cout << "closed_surface yes\norientable " << yes_no(orientable) << '\n';
      else
        std::cout << "closed_surface no\n";
    } else if (experiment->parsed()) {
      const std::string config = config_path.empty() ? std::string() : read_text(config_path);
      std::vector<std::string> overrides;
      for (std::size_t i = 0; i < keys.size(); ++i)
        if (experiment->count("--" + keys[i])) overrides.push_back(keys[i] + "=" + values[i]);
      std::vector<const char*> raw;
      for (const auto& o : overrides) raw.push_back(o.c_str());
      char* summary = nullptr;
      check(rcx_experiment_run(config.c_str(), raw.data(), raw.size(), nullptr, &summary));
      StringPtr owned(summary);
      std::cout << summary;
    }
  } catch (const Failure& f) {
    const char* msg = rcx_last_error();
    if (msg && *msg) std::cerr << "error: " << rcx_status_name(f.status) << ": " << msg << '\n';
    return 1;
  }
  return 0;
}
