// Command-line front end: exact distances, geodesics and projections,
// curtain queries, chain search reports, curtain-model bounds, the glued
// spaces and their maps, and the reproducible experiment lab.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "parkinglot/chain.hpp"
#include "parkinglot/config.hpp"
#include "parkinglot/csv.hpp"
#include "parkinglot/dhat.hpp"
#include "parkinglot/experiments.hpp"
#include "parkinglot/oracle.hpp"
#include "parkinglot/spaces.hpp"
#include "parkinglot/weights.hpp"

using namespace parkinglot;
using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    const size_t p = s.find(sep, start);
    if (p == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, p - start));
    start = p + 1;
  }
}

double num(const std::string& s) {
  size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::domain_error("bad number '" + s + "'");
  return v;
}

PointX parse_xy(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 2)
    throw std::domain_error("expected theta,r, got '" + s + "'");
  return PointX(num(parts[0]), num(parts[1]));
}

// spiral | radial:theta0 | spiralray:theta0:+1|-1 | seg:theta1,r1:theta2,r2
Geodesic parse_geodesic(const std::string& desc) {
  const auto parts = split(desc, ':');
  if (parts[0] == "spiral" && parts.size() == 1)
    return Geodesic::spiral_line();
  if (parts[0] == "radial" && parts.size() == 2)
    return Geodesic::radial_ray(num(parts[1]));
  if (parts[0] == "spiralray" && parts.size() == 3) {
    const int dir = parts[2] == "+1" || parts[2] == "+" ? +1
                    : parts[2] == "-1" || parts[2] == "-" ? -1
                                                          : 0;
    if (dir == 0) throw std::domain_error("spiralray direction must be +1 or -1");
    return Geodesic::spiral_ray(PointX(num(parts[1]), 1.0), dir);
  }
  if (parts[0] == "seg" && parts.size() == 3)
    return Geodesic::segment(parse_xy(parts[1]), parse_xy(parts[2]));
  throw std::domain_error("bad geodesic descriptor '" + desc + "'");
}

// fan:s | strip:theta0:s | seg:theta1,r1:theta2,r2:s
Curtain parse_curtain(const std::string& desc) {
  const auto parts = split(desc, ':');
  if (parts[0] == "fan" && parts.size() == 2)
    return Curtain::fan(num(parts[1]));
  if (parts[0] == "strip" && parts.size() == 3)
    return Curtain::strip(num(parts[1]), num(parts[2]));
  if (parts[0] == "seg" && parts.size() == 4)
    return Curtain(Geodesic::segment(parse_xy(parts[1]), parse_xy(parts[2])),
                   num(parts[3]));
  throw std::domain_error("bad curtain descriptor '" + desc + "'");
}

// base:theta:r | ray:i:s
GluedPoint parse_glued(const std::string& desc) {
  const auto parts = split(desc, ':');
  if (parts[0] == "base" && parts.size() == 3)
    return GluedPoint::base_point(PointX(num(parts[1]), num(parts[2])));
  if (parts[0] == "ray" && parts.size() == 3)
    return GluedPoint::ray_point(static_cast<int>(num(parts[1])),
                                 num(parts[2]));
  throw std::domain_error("bad glued-point descriptor '" + desc + "'");
}

const char* side_name(Side s) {
  switch (s) {
    case Side::Minus: return "minus";
    case Side::OnCurtain: return "on";
    case Side::Plus: return "plus";
  }
  return "?";
}

json curtain_json(const Curtain& c) { return json(c.describe()); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact geometry of the infinite parking lot and its curtain model"};
  app.require_subcommand(1);

  double t1 = 0, r1 = 1, t2 = 0, r2 = 1, tol = 1e-9, resolution = 0.01;
  double rho = 0.5;
  int budget = 500, l_param = 1, assumed = 1, lmax = 30, pairs = 10000;
  std::string gdesc, g2desc, cdesc, c2desc, wdesc, window_spec, map_name = "phi";
  std::vector<std::string> chain_descs;
  std::string exp_name, config_path, out_dir;
  bool plots = false;
  uint64_t seed = 20260815;

  auto* cmd_dist = app.add_subcommand("dist", "geodesic distance between two points");
  cmd_dist->add_option("theta1", t1)->required();
  cmd_dist->add_option("r1", r1)->required();
  cmd_dist->add_option("theta2", t2)->required();
  cmd_dist->add_option("r2", r2)->required();

  auto* cmd_geo = app.add_subcommand("geodesic", "classify the geodesic between two points");
  double eval_t = -1.0;
  cmd_geo->add_option("theta1", t1)->required();
  cmd_geo->add_option("r1", r1)->required();
  cmd_geo->add_option("theta2", t2)->required();
  cmd_geo->add_option("r2", r2)->required();
  cmd_geo->add_option("--eval", eval_t, "evaluate at arclength t");

  auto* cmd_proj = app.add_subcommand("project", "closest-point projection parameter");
  cmd_proj->add_option("theta", t1)->required();
  cmd_proj->add_option("r", r1)->required();
  cmd_proj->add_option("geodesic", gdesc, "spiral | radial:t | spiralray:t:+1 | seg:a,b:c,d")->required();
  cmd_proj->add_option("--tol", tol);

  auto* cmd_angle = app.add_subcommand("angle", "Alexandrov angle between geodesics at a common basepoint");
  cmd_angle->add_option("g1", gdesc)->required();
  cmd_angle->add_option("g2", g2desc)->required();

  auto* cmd_oracle = app.add_subcommand("oracle", "grid-graph distance oracle");
  cmd_oracle->add_option("theta1", t1)->required();
  cmd_oracle->add_option("r1", r1)->required();
  cmd_oracle->add_option("theta2", t2)->required();
  cmd_oracle->add_option("r2", r2)->required();
  cmd_oracle->add_option("--resolution", resolution);
  cmd_oracle->add_option("--window", window_spec, "theta_lo:theta_hi:r_max");

  auto* cmd_curt = app.add_subcommand("curtain", "curtain queries");
  cmd_curt->require_subcommand(1);
  auto* cmd_member = cmd_curt->add_subcommand("member", "side of a point");
  cmd_member->add_option("curtain", cdesc)->required();
  cmd_member->add_option("theta", t1)->required();
  cmd_member->add_option("r", r1)->required();
  auto* cmd_disj = cmd_curt->add_subcommand("disjoint", "disjointness with certificate");
  cmd_disj->add_option("c1", cdesc)->required();
  cmd_disj->add_option("c2", c2desc)->required();
  cmd_disj->add_option("--budget", budget);
  auto* cmd_meets = cmd_curt->add_subcommand("meets", "common-point search");
  cmd_meets->add_option("c1", cdesc)->required();
  cmd_meets->add_option("c2", c2desc)->required();
  cmd_meets->add_option("--budget", budget);

  auto* cmd_chain = app.add_subcommand("chain", "chain construction and search");
  cmd_chain->require_subcommand(1);
  auto* cmd_pack = cmd_chain->add_subcommand("pack", "maximal same-dual chain between two points");
  cmd_pack->add_option("geodesic", gdesc)->required();
  cmd_pack->add_option("theta1", t1)->required();
  cmd_pack->add_option("r1", r1)->required();
  cmd_pack->add_option("theta2", t2)->required();
  cmd_pack->add_option("r2", r2)->required();
  auto* cmd_verify = cmd_chain->add_subcommand("verify", "verify a chain of curtains");
  cmd_verify->add_option("curtains", chain_descs, "curtain descriptors in order")->required();
  cmd_verify->add_option("--budget", budget);
  auto* cmd_refute = cmd_chain->add_subcommand("refute", "search chains meeting a disjoint pair");
  double fam_lo = -2.5, fam_hi = 7.5, fam_pole_max = 12.0;
  cmd_refute->add_option("c1", cdesc)->required();
  cmd_refute->add_option("c2", c2desc)->required();
  cmd_refute->add_option("--budget", budget);
  cmd_refute->add_option("--family-lo", fam_lo);
  cmd_refute->add_option("--family-hi", fam_hi);
  cmd_refute->add_option("--pole-max", fam_pole_max);
  auto* cmd_dl = cmd_chain->add_subcommand("dl-bounds", "two-sided L-metric bounds");
  cmd_dl->add_option("theta1", t1)->required();
  cmd_dl->add_option("r1", r1)->required();
  cmd_dl->add_option("theta2", t2)->required();
  cmd_dl->add_option("r2", r2)->required();
  cmd_dl->add_option("--L", l_param);
  cmd_dl->add_option("--assumed", assumed);

  auto* cmd_dhat = app.add_subcommand("dhat", "curtain-model distance interval");
  cmd_dhat->add_option("theta1", t1)->required();
  cmd_dhat->add_option("r1", r1)->required();
  cmd_dhat->add_option("theta2", t2)->required();
  cmd_dhat->add_option("r2", r2)->required();
  cmd_dhat->add_option("--rho", rho);
  cmd_dhat->add_option("--lmax", lmax);
  cmd_dhat->add_option("--assumed", assumed);

  auto* cmd_map = app.add_subcommand("map", "shear maps and QI fitting");
  cmd_map->require_subcommand(1);
  auto* cmd_phi = cmd_map->add_subcommand("phi", "apply the shear to a point of X");
  cmd_phi->add_option("theta", t1)->required();
  cmd_phi->add_option("r", r1)->required();
  auto* cmd_phibar = cmd_map->add_subcommand("phibar", "apply the glued shear W -> Z");
  cmd_phibar->add_option("point", wdesc, "base:theta:r | ray:i:s")->required();
  auto* cmd_qifit = cmd_map->add_subcommand("qi-fit", "fit QI constants on sampled pairs");
  cmd_qifit->add_option("--map", map_name, "phi | phibar | identity | square");
  cmd_qifit->add_option("--pairs", pairs);
  cmd_qifit->add_option("--seed", seed);

  auto* cmd_lab = app.add_subcommand("explab", "experiment lab");
  cmd_lab->require_subcommand(1);
  auto* cmd_run = cmd_lab->add_subcommand("run", "run a named experiment");
  cmd_run->add_option("name", exp_name, "fig2 | quasipoint | quasiline | wz | oracle | qi")->required();
  cmd_run->add_option("--config", config_path, "key=value config file");
  cmd_run->add_option("--out", out_dir, "output directory");
  cmd_run->add_flag("--plots", plots, "also write SVG plots");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_dist) {
      const PointX p(t1, r1), q(t2, r2);
      std::printf("%s,%s,%s,%s,%s\n", fmt12(p.theta).c_str(),
                  fmt12(p.rad).c_str(), fmt12(q.theta).c_str(),
                  fmt12(q.rad).c_str(), fmt12(dist(p, q)).c_str());
    } else if (*cmd_geo) {
      const PointX p(t1, r1), q(t2, r2);
      const Geodesic g = geodesic_between(p, q);
      const auto& cls = g.classification();
      if (cls.tag == GeodesicClass::Tag::Chord) {
        std::printf("chord,length=%s\n", fmt12(g.length()).c_str());
      } else {
        std::printf(
            "tangent-arc-tangent,length=%s,tangent1=%s,arc=%s,tangent2=%s,"
            "tangency1=%s,tangency2=%s\n",
            fmt12(g.length()).c_str(), fmt12(cls.tangent_len1).c_str(),
            fmt12(cls.arc_len).c_str(), fmt12(cls.tangent_len2).c_str(),
            fmt12(cls.tangency_angle1).c_str(),
            fmt12(cls.tangency_angle2).c_str());
      }
      if (eval_t >= 0.0) {
        const PointX e = g.eval(eval_t);
        std::printf("%s,%s,%s\n", fmt12(eval_t).c_str(),
                    fmt12(e.theta).c_str(), fmt12(e.rad).c_str());
      }
    } else if (*cmd_proj) {
      const double t = project(PointX(t1, r1), parse_geodesic(gdesc), tol);
      std::printf("%s\n", fmt12(t).c_str());
    } else if (*cmd_angle) {
      const double a =
          alexandrov_angle(parse_geodesic(gdesc), parse_geodesic(g2desc));
      std::printf("%s\n", fmt12(a).c_str());
    } else if (*cmd_oracle) {
      const PointX p(t1, r1), q(t2, r2);
      std::optional<OracleWindow> window;
      if (!window_spec.empty()) {
        const auto parts = split(window_spec, ':');
        if (parts.size() != 3)
          throw std::domain_error("window must be theta_lo:theta_hi:r_max");
        window = OracleWindow{num(parts[0]), num(parts[1]), num(parts[2])};
      }
      const double o = oracle_dist(p, q, resolution, window);
      std::printf("%s,%s,%s,%s,%s\n", fmt12(p.theta).c_str(),
                  fmt12(p.rad).c_str(), fmt12(q.theta).c_str(),
                  fmt12(q.rad).c_str(), fmt12(o).c_str());
    } else if (*cmd_member) {
      std::printf("%s\n",
                  side_name(member(parse_curtain(cdesc), PointX(t1, r1))));
    } else if (*cmd_disj) {
      const auto r = disjoint(parse_curtain(cdesc), parse_curtain(c2desc), budget);
      switch (r.kind) {
        case DisjointnessResult::Kind::CertifiedDisjoint:
          std::printf("certified-disjoint\n");
          break;
        case DisjointnessResult::Kind::RefutedWithWitness:
          std::printf("refuted,%s,%s\n", fmt12(r.witness->theta).c_str(),
                      fmt12(r.witness->rad).c_str());
          break;
        case DisjointnessResult::Kind::Unknown:
          std::printf("unknown\n");
          break;
      }
    } else if (*cmd_meets) {
      const auto r = meets(parse_curtain(cdesc), parse_curtain(c2desc), budget);
      if (r.found)
        std::printf("witness,%s,%s\n", fmt12(r.witness->theta).c_str(),
                    fmt12(r.witness->rad).c_str());
      else
        std::printf("not-found\n");
    } else if (*cmd_pack) {
      const auto chain = max_same_dual_chain(parse_geodesic(gdesc),
                                             PointX(t1, r1), PointX(t2, r2));
      json j;
      j["op"] = "pack";
      j["cardinality"] = chain.cardinality();
      json poles = json::array();
      for (const auto& c : chain.curtains) poles.push_back(c.pole_center());
      j["poles"] = poles;
      j["certification"] =
          chain.certification.kind == Certification::Kind::Certified
              ? "certified"
              : "sampled";
      std::printf("%s\n", j.dump().c_str());
    } else if (*cmd_verify) {
      Chain chain;
      for (const auto& d : chain_descs)
        chain.curtains.push_back(parse_curtain(d));
      const auto cert = verify_chain(chain, budget);
      json j;
      j["op"] = "verify";
      j["budget"] = budget;
      switch (cert.kind) {
        case Certification::Kind::Certified: j["certification"] = "certified"; break;
        case Certification::Kind::Sampled: j["certification"] = "sampled"; break;
        case Certification::Kind::Refuted:
          j["certification"] = "refuted";
          j["witness"] = {cert.witness->theta, cert.witness->rad};
          break;
      }
      std::printf("%s\n", j.dump().c_str());
    } else if (*cmd_refute) {
      const Curtain h1 = parse_curtain(cdesc), h2 = parse_curtain(c2desc);
      const auto family =
          CandidateFamily::default_family(fam_lo, fam_hi, fam_pole_max);
      const auto rep = separation_refuter(h1, h2, family, budget);
      json j;
      j["pair"] = {curtain_json(h1), curtain_json(h2)};
      j["budget"] = rep.budget;
      j["maxChain"] = rep.max_meeting_chain_found;
      j["assumedSeparation"] = std::max(1, rep.max_meeting_chain_found);
      std::printf("%s\n", j.dump().c_str());
    } else if (*cmd_dl) {
      const PointX p(t1, r1), q(t2, r2);
      const auto lo = dl_lower(p, q, l_param, assumed);
      json j;
      j["pair"] = json::array({json::array({p.theta, p.rad}),
                               json::array({q.theta, q.rad})});
      j["L"] = l_param;
      j["assumedSeparation"] = lo.assumed_separation;
      j["lower"] = lo.value;
      j["lowerValidForL"] = lo.valid();
      j["upper"] = dl_upper(p, q, l_param);
      std::printf("%s\n", j.dump().c_str());
    } else if (*cmd_dhat) {
      const PointX p(t1, r1), q(t2, r2);
      const auto w = WeightSeq::geometric(rho, lmax);
      const FanChainProvider provider(assumed);
      const auto e = dhat_bounds(p, q, w, provider);
      const std::string pair = fmt12(p.theta) + ":" + fmt12(p.rad) + "|" +
                               fmt12(q.theta) + ":" + fmt12(q.rad);
      const std::string l0 = e.assumed_separation
                                 ? std::to_string(*e.assumed_separation)
                                 : "none";
      std::printf("%s,%s,%s,%s,%s\n", pair.c_str(), fmt12(e.lower).c_str(),
                  fmt12(e.upper).c_str(), fmt12(e.tail_bound).c_str(),
                  l0.c_str());
    } else if (*cmd_phi) {
      const PointX p = phi(PointX(t1, r1));
      std::printf("%s,%s\n", fmt12(p.theta).c_str(), fmt12(p.rad).c_str());
    } else if (*cmd_phibar) {
      std::printf("%s\n", phibar(parse_glued(wdesc)).describe().c_str());
    } else if (*cmd_qifit) {
      QIFit fit;
      WindowX window{-20.0, 20.0, 1.0, 1048576.0};
      if (map_name == "phi")
        fit = qi_fit_map([](const PointX& p) { return phi(p); }, window, pairs, seed);
      else if (map_name == "identity")
        fit = qi_fit_map([](const PointX& p) { return p; }, window, pairs, seed);
      else if (map_name == "square")
        fit = qi_fit_map(
            [](const PointX& p) { return PointX(p.theta, p.rad * p.rad); },
            window, pairs, seed);
      else if (map_name == "phibar")
        fit = qi_fit_phibar(pairs, seed);
      else
        throw std::domain_error("unknown map '" + map_name + "'");
      std::printf("lambda=%s,eps=%s,pairs=%d,max_violation=%s\n",
                  fmt12(fit.lambda).c_str(), fmt12(fit.eps).c_str(),
                  fit.sample_pairs, fmt12(fit.max_violation).c_str());
    } else if (*cmd_run) {
      ExperimentConfig cfg;
      if (!config_path.empty()) cfg = load_config(config_path);
      if (!out_dir.empty()) cfg.out_dir = out_dir;
      if (plots) cfg.plots = true;
      const auto result = run_experiment(exp_name, cfg);
      for (const auto& f : result.files) std::printf("wrote %s\n", f.c_str());
      std::printf("%s\n", result.summary.c_str());
      return result.passed ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
