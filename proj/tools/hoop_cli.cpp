// command line front end over the hoops library
//
// exit codes: 0 success, 1 input or parse error, 2 axiom violation,
// 3 verification or isomorphism failure

#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hoops/hoops.hpp"

namespace {

using hoops::Elem;
using hoops::Hoop;
using hoops::json;

void print_report(const hoops::ValidationReport& rep) {
  for (const auto& v : rep.violations) {
    std::printf("violation: %s", v.axiom.c_str());
    if (!v.witness.empty()) {
      std::printf(" at (");
      for (size_t i = 0; i < v.witness.size(); ++i)
        std::printf(i ? ",%d" : "%d", v.witness[i]);
      std::printf(")");
    }
    std::printf("\n");
  }
}

std::string join_elems(const std::vector<Elem>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(v[i]);
  }
  return s;
}

int cmd_validate(const std::string& path) {
  hoops::HoopData d = hoops::hoop_data_from_json(hoops::parse_json(hoops::read_input(path)));
  hoops::ValidationReport rep = hoops::validate_hoop(d);
  if (rep.valid()) {
    std::printf("valid hoop of order %d\n", d.size);
    return 0;
  }
  print_report(rep);
  return 2;
}

int cmd_info(const std::string& path) {
  Hoop h = hoops::load_hoop(path);
  std::printf("order: %d\n", h.size());
  std::printf("unit: %d\n", h.unit());
  std::printf("bottom: %d\n", h.order().bottom);
  std::printf("idempotents: %s\n", join_elems(hoops::idempotents(h)).c_str());
  std::printf("filters: %zu\n", hoops::all_filters(h).size());
  std::printf("simple: %s\n", hoops::is_simple(h) ? "yes" : "no");
  if (hoops::mv_chain_rank(h))
    std::printf("mv-chain: yes, order %d\n", h.size());
  else
    std::printf("mv-chain: no\n");
  std::printf("idempotent-chain length: %d\n", hoops::idempotent_chain_length(h));
  return 0;
}

int cmd_iso(const std::string& a_path, const std::string& b_path) {
  Hoop a = hoops::load_hoop(a_path);
  Hoop b = hoops::load_hoop(b_path);
  auto iso = hoops::hoop_isomorphism(a, b);
  if (!iso) {
    std::printf("none\n");
    return 3;
  }
  std::printf("%s\n", join_elems(*iso).c_str());
  return 0;
}

int cmd_product(const std::string& kind, const std::string& a_path, const std::string& b_path,
                const std::string& morphism_path, const std::string& out) {
  Hoop a = hoops::load_hoop(a_path);
  Hoop b = hoops::load_hoop(b_path);
  Hoop result;
  if (kind == "direct") {
    result = hoops::direct_product(a, b).algebra;
  } else if (kind == "osum") {
    result = hoops::ordinal_sum(a, b);
  } else if (kind == "fprod") {
    if (morphism_path.empty())
      throw hoops::argument_error("fprod needs --morphism");
    hoops::MorphismFile m = hoops::load_morphism(morphism_path);
    result = hoops::f_product(a, b, m.map).algebra;
  } else {
    throw hoops::argument_error("unknown product kind " + kind);
  }
  hoops::write_output(out, hoops::serialize(hoops::hoop_to_json(result)));
  return 0;
}

int cmd_quotient(const std::string& path, const std::vector<Elem>& generators,
                 const std::string& out) {
  Hoop h = hoops::load_hoop(path);
  hoops::Filter f = hoops::filter_generated(h, generators);
  hoops::QuotientHoop q = hoops::quotient(h, f);
  json j;
  j["filter"] = f.members;
  j["projection"] = q.class_of;
  j["quotient"] = hoops::hoop_to_json(q.algebra);
  hoops::write_output(out, hoops::serialize(j));
  return 0;
}

int cmd_decompose(const std::string& path, const std::string& assoc, const std::string& strategy,
                  const std::string& out) {
  Hoop h = hoops::load_hoop(path);
  hoops::Association a =
      assoc == "left" ? hoops::Association::left : hoops::Association::right;
  hoops::FilterStrategy s;
  if (strategy == "smallest")
    s = hoops::FilterStrategy::smallest;
  else if (strategy == "largest")
    s = hoops::FilterStrategy::largest;
  else if (strategy == "coatom")
    s = hoops::FilterStrategy::coatom;
  else
    throw hoops::argument_error("unknown strategy " + strategy);
  hoops::DecompositionCertificate cert = hoops::full_decomposition(h, a, s);
  hoops::write_output(out, hoops::serialize(hoops::certificate_to_json(cert)));
  return 0;
}

int cmd_verify_cert(const std::string& hoop_path, const std::string& cert_path) {
  Hoop h = hoops::load_hoop(hoop_path);
  hoops::DecompositionCertificate cert = hoops::load_certificate(cert_path);
  std::string why;
  if (hoops::verify_certificate(h, cert, &why)) {
    std::printf("certificate ok: %d leaves\n", hoops::leaf_count(cert.tree));
    return 0;
  }
  std::printf("certificate rejected: %s\n", why.c_str());
  return 3;
}

int cmd_assoc(const std::string& a_path, const std::string& b_path, const std::string& c_path,
              const std::string& f_path, const std::string& g_path) {
  Hoop a = hoops::load_hoop(a_path);
  Hoop b = hoops::load_hoop(b_path);
  Hoop c = hoops::load_hoop(c_path);
  std::vector<Elem> f = hoops::load_morphism(f_path).map;
  std::vector<Elem> g = hoops::load_morphism(g_path).map;
  hoops::LeftAssociatedPair lp = hoops::make_left_pair(a, b, c, f, g);
  hoops::RightAssociatedPair rp = hoops::to_right_associated(lp);
  hoops::LeftAssociatedPair back = hoops::to_left_associated(rp);
  if (!hoops::pairs_equal(lp, back)) {
    std::printf("round trip failed\n");
    return 3;
  }
  hoops::ReassociationIso ri = hoops::reassociation_iso(rp);
  std::printf("round trip ok\n");
  std::printf("left form order: %d\n", ri.nested_left.algebra.size());
  std::printf("right form order: %d\n", ri.nested_right.algebra.size());
  std::printf("reassociation iso: %s\n", join_elems(ri.map).c_str());
  return 0;
}

int cmd_enumerate(int n, int cap, const std::string& out_dir) {
  hoops::HoopCensus census = hoops::enumerate_hoops(n, cap);
  if (out_dir.empty()) {
    json j;
    j["count"] = census.count;
    j["order"] = census.order;
    json reps = json::array();
    for (const Hoop& h : census.representatives) reps.push_back(hoops::hoop_to_json(h));
    j["representatives"] = std::move(reps);
    std::fputs(hoops::serialize(j).c_str(), stdout);
  } else {
    std::filesystem::create_directories(out_dir);
    for (int i = 0; i < census.count; ++i) {
      std::string name = "hoop_" + std::to_string(n) + "_" + std::to_string(i) + ".json";
      hoops::write_output((std::filesystem::path(out_dir) / name).string(),
                          hoops::serialize(hoops::hoop_to_json(
                              census.representatives[static_cast<size_t>(i)])));
    }
    std::printf("%d hoops of order %d written\n", census.count, n);
  }
  return 0;
}

int cmd_census_morphisms(const std::string& a_path, const std::string& b_path,
                         const std::string& out) {
  Hoop a = hoops::load_hoop(a_path);
  Hoop b = hoops::load_hoop(b_path);
  // maps b -> a, the shapes usable to glue a on the left of b
  std::vector<std::vector<Elem>> maps = hoops::all_product_morphism_maps(b, a);
  json j;
  j["count"] = maps.size();
  j["maps"] = maps;
  if (hoops::is_mv_chain(a) && a.size() >= 2) {
    // codomain is an mv-chain: pair each map with an idempotent of b
    hoops::ChainMorphismCensus cen = hoops::census_to_chain(b, a);
    j["pairing"]["kind"] = "to-chain";
    j["pairing"]["idempotents"] = cen.paired_idempotent;
  } else if (hoops::is_mv_chain(b) && b.size() >= 2) {
    hoops::ChainMorphismCensus cen = hoops::census_from_chain(a, b);
    j["pairing"]["kind"] = "from-chain";
    j["pairing"]["idempotents"] = cen.paired_idempotent;
  }
  hoops::write_output(out, hoops::serialize(j));
  return 0;
}

int cmd_bullet(const std::string& a_path, const std::string& b_path, const std::string& hom_path,
               const std::string& out) {
  Hoop a = hoops::load_hoop(a_path);
  Hoop b = hoops::load_hoop(b_path);
  std::vector<Elem> f = hoops::load_morphism(hom_path).map;
  hoops::BulletProduct bp = hoops::bullet_product(a, b, f);
  json j;
  j["glue"] = bp.glue;
  j["kernel"] = bp.kernel_filter.members;
  j["image"] = bp.image_filter.members;
  j["product"] = hoops::hoop_to_json(bp.product.algebra);
  hoops::write_output(out, hoops::serialize(j));
  return 0;
}

int cmd_exact(const std::string& manifest_path) {
  hoops::HoopSequence seq = hoops::load_sequence_manifest(manifest_path);
  hoops::check_sequence_shape(seq);
  bool all = true;
  for (size_t i = 0; i + 1 < seq.maps.size(); ++i) {
    std::vector<Elem> img = hoops::image_elements(seq.maps[i]);
    hoops::Filter ker = hoops::kernel(seq.hoops[i + 1], seq.hoops[i + 2], seq.maps[i + 1]);
    bool here = img == ker.members;
    std::printf("junction %zu: image {%s} kernel {%s} %s\n", i + 1,
                join_elems(img).c_str(), join_elems(ker.members).c_str(),
                here ? "exact" : "NOT exact");
    all = all && here;
  }
  std::printf(all ? "sequence is exact\n" : "sequence is not exact\n");
  return all ? 0 : 3;
}

int cmd_lemmas(const std::string& path) {
  Hoop h = hoops::load_hoop(path);
  bool ok = true;
  hoops::ValidationReport rep = hoops::check_lemma_suite(h);
  if (rep.valid()) {
    std::printf("lemma suite: ok\n");
  } else {
    std::printf("lemma suite:\n");
    print_report(rep);
    ok = false;
  }
  auto filters = hoops::all_filters(h);
  for (const auto& f : filters) {
    hoops::ValidationReport crep = hoops::check_class_lemma(h, f);
    if (crep.valid()) {
      std::printf("class lemma, filter {%s}: ok\n", join_elems(f.members).c_str());
    } else {
      std::printf("class lemma, filter {%s}:\n", join_elems(f.members).c_str());
      print_report(crep);
      ok = false;
    }
  }
  return ok ? 0 : 3;
}

int cmd_export_dot(const std::string& path, const std::string& out) {
  Hoop h = hoops::load_hoop(path);
  hoops::write_output(out, hoops::to_dot(h));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite hoop toolkit"};
  app.require_subcommand(1);
  bool seedless = false;
  app.add_flag("--seedless", seedless, "run without randomness (always on; accepted for scripts)");

  std::string path_a, path_b, path_c, morphism_path, f_path, g_path, out = "-";
  std::string kind = "direct", assoc = "right", strategy = "smallest", out_dir;
  std::vector<Elem> filter_elems;
  int order = 0, cap = 6;

  auto* validate = app.add_subcommand("validate", "check the hoop axioms");
  validate->add_option("hoop", path_a)->required();

  auto* info = app.add_subcommand("info", "basic structure summary");
  info->add_option("hoop", path_a)->required();

  auto* iso = app.add_subcommand("iso", "find an isomorphism");
  iso->add_option("a", path_a)->required();
  iso->add_option("b", path_b)->required();

  auto* product = app.add_subcommand("product", "direct, ordinal sum or glued product");
  product->add_option("--kind", kind, "direct|osum|fprod");
  product->add_option("--morphism", morphism_path, "glue map for fprod");
  product->add_option("--out", out);
  product->add_option("a", path_a)->required();
  product->add_option("b", path_b)->required();

  auto* quot = app.add_subcommand("quotient", "quotient by the filter the elements generate");
  quot->add_option("hoop", path_a)->required();
  quot->add_option("--filter", filter_elems, "filter generators")->required()->delimiter(',');
  quot->add_option("--out", out);

  auto* decompose = app.add_subcommand("decompose", "factor into mv-chains with a certificate");
  decompose->add_option("hoop", path_a)->required();
  decompose->add_option("--assoc", assoc, "left|right");
  decompose->add_option("--strategy", strategy, "smallest|largest|coatom");
  decompose->add_option("--out", out);

  auto* verify = app.add_subcommand("verify-cert", "re-check a decomposition certificate");
  verify->add_option("hoop", path_a)->required();
  verify->add_option("cert", path_b)->required();

  auto* assoc_cmd = app.add_subcommand("assoc", "reassociation round trip on a triple");
  assoc_cmd->add_option("a", path_a)->required();
  assoc_cmd->add_option("b", path_b)->required();
  assoc_cmd->add_option("c", path_c)->required();
  assoc_cmd->add_option("--f", f_path, "glue map b to a")->required();
  assoc_cmd->add_option("--g", g_path, "glue map c to the left product")->required();

  auto* enumerate = app.add_subcommand("enumerate", "all hoops of an order up to isomorphism");
  enumerate->add_option("n", order)->required();
  enumerate->add_option("--out", out_dir, "write one file per hoop");
  enumerate->add_option("--cap", cap, "largest allowed order");

  auto* census = app.add_subcommand("census-morphisms", "all glue maps b to a");
  census->add_option("a", path_a)->required();
  census->add_option("b", path_b)->required();
  census->add_option("--out", out);

  auto* bullet = app.add_subcommand("bullet", "kernel against cokernel glued product");
  bullet->add_option("a", path_a)->required();
  bullet->add_option("b", path_b)->required();
  bullet->add_option("--hom", f_path, "filter homomorphism a to b")->required();
  bullet->add_option("--out", out);

  auto* exact = app.add_subcommand("exact", "check image equals next kernel along a sequence");
  exact->add_option("manifest", path_a)->required();

  auto* lemmas = app.add_subcommand("lemmas", "arithmetic and class lemma sweeps");
  lemmas->add_option("hoop", path_a)->required();

  auto* dot = app.add_subcommand("export-dot", "order diagram in DOT");
  dot->add_option("hoop", path_a)->required();
  dot->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*validate) return cmd_validate(path_a);
    if (*info) return cmd_info(path_a);
    if (*iso) return cmd_iso(path_a, path_b);
    if (*product) return cmd_product(kind, path_a, path_b, morphism_path, out);
    if (*quot) return cmd_quotient(path_a, filter_elems, out);
    if (*decompose) return cmd_decompose(path_a, assoc, strategy, out);
    if (*verify) return cmd_verify_cert(path_a, path_b);
    if (*assoc_cmd) return cmd_assoc(path_a, path_b, path_c, f_path, g_path);
    if (*enumerate) return cmd_enumerate(order, cap, out_dir);
    if (*census) return cmd_census_morphisms(path_a, path_b, out);
    if (*bullet) return cmd_bullet(path_a, path_b, f_path, out);
    if (*exact) return cmd_exact(path_a);
    if (*lemmas) return cmd_lemmas(path_a);
    if (*dot) return cmd_export_dot(path_a, out);
  } catch (const hoops::invalid_hoop& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const hoops::internal_error& e) {
    std::fprintf(stderr, "internal check failed: %s\n", e.what());
    return 3;
  } catch (const hoops::argument_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const hoops::structural_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
