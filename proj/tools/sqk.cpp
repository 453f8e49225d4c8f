// sqk: command-line front end for the symmetric quandle toolkit.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <sstream>

#include "repro.hpp"
#include "sqk/io.hpp"

using namespace sqk;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitValidation = 2;

std::size_t size_cap() {
  const char* env = std::getenv("SQK_SIZE_CAP");
  if (!env || !*env) return kDefaultSizeCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0)
    throw InputError(std::string("SQK_SIZE_CAP must be a positive integer, got '") +
                     env + "'");
  return static_cast<std::size_t>(v);
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-")
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  return read_text_file(path);
}

LabeledQuandle builtin_r4() { return fixtures::r4_antipodal(); }

LabeledQuandle load_quandle_arg(const std::string& path) {
  if (path.empty()) throw InputError("--quandle is required");
  return read_quandle(read_text_file(path));
}

struct Context {
  LabeledQuandle q;
  XSetAction act;
  bool y_is_x;
  ElementNames names() const {
    return ElementNames(q.quandle.order(), act.y_size(), q.labels, y_is_x);
  }
};

Context context(const LabeledQuandle& q, const std::string& xset) {
  if (xset == "X")
    return {q, XSetAction::quandle_action(q.quandle), true};
  if (xset.empty() || xset == "trivial")
    return {q, XSetAction::singleton(q.quandle), false};
  return {q, XSetAction::validate(q.quandle, parse_xset_file(read_text_file(xset))),
          false};
}

Involution dihedral_rho(int n, const std::string& name) {
  if (name == "identity") return Involution::identity(n);
  if (name == "antipodal") return antipodal_map(n);
  if (name == "half-antipodal-even" || name == "half-antipodal-0")
    return half_antipodal_map(n, 0);
  if (name == "half-antipodal-odd" || name == "half-antipodal-1")
    return half_antipodal_map(n, 1);
  throw InputError("unknown involution '" + name +
                   "' (identity, antipodal, half-antipodal-even, "
                   "half-antipodal-odd)");
}

std::string map_string(const Involution& rho) {
  std::string out;
  for (int x = 0; x < rho.size(); ++x) {
    if (x) out += ' ';
    out += std::to_string(rho(x));
  }
  return out;
}

std::string word_string(const Word& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += (l.sign > 0 ? "+" : "-") + std::to_string(l.generator);
  }
  return out;
}

RegionConstraints constraints(const Diagram& d, const std::string& base_color,
                              const ElementNames& names) {
  RegionConstraints rc;
  if (!base_color.empty())
    rc[d.unbounded_face()] = names.region(base_color, 1, 1);
  return rc;
}

std::optional<int> face_arg(const std::string& s) {
  if (s.empty() || s == "auto") return std::nullopt;
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InputError("--unbounded-face takes 'auto' or a face index, got '" + s + "'");
}

OrientationChoice orientation_arg(const std::string& mask, int comps) {
  if (static_cast<int>(mask.size()) != comps)
    throw InputError("--orientation needs one 0/1 per component (" +
                     std::to_string(comps) + ")");
  OrientationChoice o;
  for (char c : mask) {
    if (c != '0' && c != '1') throw InputError("--orientation takes 0/1 digits");
    o.push_back(c == '1');
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric quandles: homology, colorings and cocycle invariants"};
  app.require_subcommand(1);
  std::ostringstream out;
  std::function<void()> action;

  // quandle
  auto* quandle = app.add_subcommand("quandle", "build and check symmetric quandles");
  quandle->require_subcommand(1);
  std::string q_file, rho_name = "identity", group_spec;
  int order = 0, cap = kDefaultInvolutionCap;

  auto* q_check = quandle->add_subcommand("check", "validate a quandle file");
  q_check->add_option("file", q_file, "quandle file")->required();
  q_check->callback([&] {
    action = [&] {
      const auto lq = read_quandle(read_text_file(q_file));
      const auto& s = lq.quandle;
      out << "OK order " << s.order()
          << (is_kei(s.quandle()) ? " kei" : " non-kei")
          << (s.rho() == Involution::identity(s.order()) ? " rho=identity"
                                                          : " rho=" + map_string(s.rho()))
          << " good\n";
    };
  });

  auto* q_trivial = quandle->add_subcommand("make-trivial", "trivial quandle T_n");
  q_trivial->add_option("n", order, "order")->required()->check(CLI::Range(1, 4096));
  q_trivial->add_option("--rho", rho_name, "identity | pairing");
  q_trivial->callback([&] {
    action = [&] {
      if (rho_name == "pairing") {
        if (order % 2) throw InputError("pairing needs an even order");
        out << write_quandle(fixtures::trivial_paired(order / 2));
      } else if (rho_name == "identity") {
        out << write_quandle({SymmetricQuandle(make_trivial(order),
                                               Involution::identity(order)), {}});
      } else {
        throw InputError("unknown involution '" + rho_name + "' (identity, pairing)");
      }
    };
  });

  auto* q_dihedral = quandle->add_subcommand("make-dihedral", "dihedral quandle R_n");
  q_dihedral->add_option("n", order, "order")->required()->check(CLI::Range(1, 4096));
  q_dihedral->add_option("--rho", rho_name,
                         "identity | antipodal | half-antipodal-even | half-antipodal-odd");
  q_dihedral->callback([&] {
    action = [&] {
      out << write_quandle({SymmetricQuandle(make_dihedral(order),
                                             dihedral_rho(order, rho_name)), {}});
    };
  });

  auto* q_conj = quandle->add_subcommand("make-conj", "conjugation quandle with inversion");
  q_conj->add_option("--group", group_spec, "cyclic:<n> | symmetric:<k>")->required();
  q_conj->callback([&] {
    action = [&] {
      const auto colon = group_spec.find(':');
      int k = 0;
      if (colon != std::string::npos) try {
          k = std::stoi(group_spec.substr(colon + 1));
        } catch (const std::exception&) {
        }
      const std::string kind = group_spec.substr(0, colon);
      if (colon == std::string::npos || k < 1)
        throw InputError("--group takes cyclic:<n> or symmetric:<k>");
      if (kind == "cyclic") {
        out << write_quandle({make_conjugation(make_cyclic_group(k)), {}});
      } else if (kind == "symmetric") {
        if (k > 5) throw OrderCapExceeded("symmetric groups above S_5 are not supported");
        out << write_quandle({make_conjugation(make_symmetric_group(k)), {}});
      } else {
        throw InputError("unknown group family '" + kind + "'");
      }
    };
  });

  auto* q_double = quandle->add_subcommand("double-cover", "double cover D(X)");
  q_double->add_option("file", q_file, "quandle file")->required();
  q_double->callback([&] {
    action = [&] {
      const auto lq = read_quandle(read_text_file(q_file));
      out << write_quandle({make_double_cover(lq.quandle.quandle()), {}});
    };
  });

  auto* q_invol = quandle->add_subcommand("involutions", "list all good involutions");
  q_invol->add_option("file", q_file, "quandle file")->required();
  q_invol->add_option("--cap", cap, "largest order searched");
  q_invol->callback([&] {
    action = [&] {
      const auto lq = read_quandle(read_text_file(q_file));
      const auto all = enumerate_good_involutions(lq.quandle.quandle(), cap);
      out << all.size() << " good involutions\n";
      for (const auto& rho : all) out << "rho " << map_string(rho) << "\n";
    };
  });

  // group
  auto* group = app.add_subcommand("group", "associated groups");
  group->require_subcommand(1);
  bool sym = false;
  auto presentation = [&] {
    const auto lq = read_quandle(read_text_file(q_file));
    return sym ? presentation_sym(lq.quandle) : presentation_assoc(lq.quandle.quandle());
  };
  auto* g_present = group->add_subcommand("present", "print the presentation");
  g_present->add_option("file", q_file, "quandle file")->required();
  g_present->add_flag("--sym", sym, "use G_(X,rho)");
  g_present->callback([&] {
    action = [&] {
      const auto p = presentation();
      out << "gen " << p.generators << "\n";
      for (const auto& r : p.relators) out << word_string(r) << "\n";
    };
  });
  auto* g_ab = group->add_subcommand("abelianize", "abelianization");
  g_ab->add_option("file", q_file, "quandle file")->required();
  g_ab->add_flag("--sym", sym, "use G_(X,rho)");
  g_ab->callback([&] { action = [&] { out << abelianization(presentation()).to_string() << "\n"; }; });

  // homology
  std::string quandle_path, xset = "trivial", variant = "Qrho", coeff = "Z";
  int degree = 2;
  std::optional<std::uint64_t> seed;
  bool verbose = false;
  auto* homology_cmd = app.add_subcommand("homology", "H_n of a symmetric quandle");
  homology_cmd->add_option("--quandle", quandle_path, "quandle file")->required();
  homology_cmd->add_option("--xset", xset, "X | trivial | xset file");
  homology_cmd->add_option("--variant", variant, "R | Q | Rrho | Qrho");
  homology_cmd->add_option("--degree", degree, "n")->check(CLI::Range(0, 16));
  homology_cmd->add_option("--coeff", coeff, "Z | Z/m");
  homology_cmd->add_option("--seed", seed, "shuffle relations (result unchanged)");
  homology_cmd->add_flag("--verbose", verbose, "also print the quotient chain groups");
  homology_cmd->callback([&] {
    action = [&] {
      const auto ctx = context(load_quandle_arg(quandle_path), xset);
      const auto v = parse_variant(variant);
      const auto cg = CoefficientGroup::parse(coeff);
      SymmetricComplex cx(ctx.q.quandle, ctx.act);
      const auto h = HomologyBasis::compute(cx, v, degree, cg, size_cap(), seed);
      out << "H_" << degree << "^" << to_string(v) << "(X; " << cg.to_string()
          << ")_Y = " << h.result().group.to_string() << "\n";
      if (verbose)
        for (int k = 0; k < 3; ++k)
          out << "C_" << degree - 1 + k << " = "
              << h.result().chain_groups[k].to_string() << "\n";
    };
  });

  // cocycle
  auto* cocycle = app.add_subcommand("cocycle", "cocycle files");
  cocycle->require_subcommand(1);
  std::string cocycle_path;
  auto* c_check = cocycle->add_subcommand("check", "verify the cocycle conditions");
  c_check->add_option("file", cocycle_path, "cocycle file")->required();
  c_check->add_option("--quandle", quandle_path, "quandle file")->required();
  c_check->add_option("--xset", xset, "X | trivial | xset file");
  c_check->callback([&] {
    action = [&] {
      const auto ctx = context(load_quandle_arg(quandle_path), xset);
      SymmetricComplex cx(ctx.q.quandle, ctx.act);
      const Cocycle c = load_cocycle(read_text_file(cocycle_path), cx, ctx.names());
      out << "OK degree " << c.degree() << " " << to_string(c.variant()) << " "
          << c.coefficients().to_string() << "\n";
    };
  });

  // color / invariant
  std::string pd_path, face = "auto", base_color, orientation;
  bool list = false, classes = false;
  auto diagram = [&] {
    return Diagram::build(parse_pd(read_text_file(pd_path)), face_arg(face));
  };
  auto* color = app.add_subcommand("color", "count (X,rho)_Y-colorings of a PD code");
  color->add_option("--pd", pd_path, "PD file")->required();
  color->add_option("--quandle", quandle_path, "quandle file")->required();
  color->add_option("--xset", xset, "X | trivial | xset file");
  color->add_option("--unbounded-face", face, "auto | face index");
  color->add_option("--base-color", base_color, "color of the unbounded region");
  color->add_flag("--list", list, "print every coloring");
  color->callback([&] {
    action = [&] {
      const auto ctx = context(load_quandle_arg(quandle_path), xset);
      const Diagram d = diagram();
      const auto names = ctx.names();
      const auto all = enumerate_colorings(d, ctx.q.quandle, ctx.act,
                                           constraints(d, base_color, names));
      out << all.size() << " colorings\n";
      if (list)
        for (const auto& c : all) {
          out << "arcs";
          for (Element x : c.arc) out << " " << names.element_name(x);
          out << " | regions";
          for (Element y : c.region) out << " " << y;
          out << "\n";
        }
    };
  });

  auto* invariant = app.add_subcommand("invariant", "cocycle invariant of a link diagram");
  invariant->add_option("--pd", pd_path, "PD file")->required();
  invariant->add_option("--quandle", quandle_path, "quandle file")->required();
  invariant->add_option("--xset", xset, "X | trivial | xset file");
  invariant->add_option("--cocycle", cocycle_path, "2-cocycle file");
  invariant->add_option("--unbounded-face", face, "auto | face index");
  invariant->add_option("--base-color", base_color, "color of the unbounded region");
  invariant->add_option("--orientation", orientation,
                        "0/1 per component: evaluate through the oriented diagram");
  invariant->add_flag("--classes", classes, "print homology classes instead");
  invariant->callback([&] {
    action = [&] {
      const auto ctx = context(load_quandle_arg(quandle_path), xset);
      const Diagram d = diagram();
      const auto rc = constraints(d, base_color, ctx.names());
      if (classes) {
        out << homology_classes(d, ctx.q.quandle, ctx.act, rc, size_cap()).to_string()
            << "\n";
        return;
      }
      if (cocycle_path.empty()) throw InputError("--cocycle or --classes is required");
      SymmetricComplex cx(ctx.q.quandle, ctx.act);
      const Cocycle theta = load_cocycle(read_text_file(cocycle_path), cx, ctx.names());
      if (orientation.empty())
        out << phi(d, ctx.q.quandle, ctx.act, theta, rc).to_string() << "\n";
      else
        out << phi_oriented(d, ctx.q.quandle, ctx.act, theta,
                            orientation_arg(orientation, d.component_count()), rc)
                   .to_string()
            << "\n";
    };
  });

  // surface
  auto* surface = app.add_subcommand("surface", "colored triple-point data");
  surface->require_subcommand(1);
  std::string chain_path, x_name, y_name;
  int fn = 1;
  auto surface_context = [&] {
    return context(quandle_path.empty() ? builtin_r4() : load_quandle_arg(quandle_path),
                   xset);
  };
  auto load_data = [&](const Context& ctx) {
    auto data = parse_surface_file(read_input(chain_path), ctx.names());
    check_surface_cycle(data, ctx.q.quandle, ctx.act);
    return data;
  };
  auto load_theta = [&](const Context& ctx) {
    SymmetricComplex cx(ctx.q.quandle, ctx.act);
    return load_cocycle(read_text_file(cocycle_path), cx, ctx.names());
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--quandle", quandle_path, "quandle file (default R_4 antipodal)");
    sub->add_option("--xset", xset, "X | trivial | xset file");
  };
  auto* s_fn = surface->add_subcommand("fn", "the F^(n) chain n(e,x,y,x) - n(e,y,x,y)");
  s_fn->add_option("--n", fn, "n")->required()->check(CLI::Range(1, 100000));
  s_fn->add_option("--x", x_name, "element x")->required();
  s_fn->add_option("--y", y_name, "element y")->required();
  add_common(s_fn);
  s_fn->callback([&] {
    action = [&] {
      const auto ctx = surface_context();
      const auto names = ctx.names();
      out << write_surface(generate_fn_chain(fn, names.element(x_name, 1, 1),
                                             names.element(y_name, 1, 1)),
                           names);
    };
  });
  auto* s_eval = surface->add_subcommand("eval", "evaluate a 3-cocycle per coloring");
  s_eval->add_option("--cocycle", cocycle_path, "3-cocycle file")->required();
  s_eval->add_option("--chain", chain_path, "triple-point file (default stdin)");
  add_common(s_eval);
  s_eval->callback([&] {
    action = [&] {
      const auto ctx = surface_context();
      const auto theta = load_theta(ctx);
      const auto data = load_data(ctx);
      for (const auto& g : data.groups) {
        if (data.groups.size() > 1) out << g.id << ": ";
        out << evaluate(theta, to_chain(g)).get_str() << "\n";
      }
    };
  });
  auto* s_check = surface->add_subcommand("check", "verify the 3-cycle condition");
  s_check->add_option("--chain", chain_path, "triple-point file (default stdin)");
  add_common(s_check);
  s_check->callback([&] {
    action = [&] {
      const auto data = load_data(surface_context());
      out << "OK " << data.groups.size() << " colorings\n";
    };
  });
  auto* s_bound = surface->add_subcommand("bound", "triple point lower bound");
  s_bound->add_option("--cocycle", cocycle_path, "3-cocycle file")->required();
  s_bound->add_option("--chain", chain_path, "triple-point file (default stdin)");
  add_common(s_bound);
  s_bound->callback([&] {
    action = [&] {
      const auto ctx = surface_context();
      const auto theta = load_theta(ctx);
      out << "t(F) >= " << triple_point_bound(theta, load_data(ctx)).get_str() << "\n";
    };
  });

  // repro
  auto* repro = app.add_subcommand("repro", "re-run the reproduced examples");
  int repro_failures = 0;
  repro->callback([&] { action = [&] { repro_failures = tools::run_repro(out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    action();
  } catch (const NotACycle& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  std::cout << out.str();
  return repro_failures ? kExitValidation : 0;
}
