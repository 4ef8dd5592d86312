#include "qdilog/errors.hpp"
#include "qdilog/render.hpp"
#include "qdilog/verify.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace qdilog;

namespace {

DimVector to_dims(const std::vector<int>& v, int want) {
    if (v.size() == 1 && want > 1) return DimVector::Constant(want, v[0]);
    if (static_cast<int>(v.size()) != want) throw DimensionMismatch(static_cast<long>(v.size()), want);
    return Eigen::Map<const DimVector>(v.data(), static_cast<long>(v.size()));
}

int report(const Verdict& v, const std::string& format) {
    if (format == "json")
        std::cout << verdict_json(v).dump(2) << "\n";
    else
        std::cout << verdict_pretty(v) << "\n";
    return v.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum dilogarithm identities for square products of A-type quivers"};
    app.require_subcommand(1);

    int n = 2, nprime = 2, window = 24;
    std::vector<int> box, gamma;
    std::string format = "pretty", orders = "canonical", axis_name = "horizontal", layout = "figure";
    std::string orientation;
    std::vector<int> kostant;
    std::uint64_t seed = 1;

    auto grid_opts = [&](CLI::App* c) {
        c->add_option("--n", n, "rows")->check(CLI::PositiveNumber);
        c->add_option("--nprime", nprime, "columns")->check(CLI::PositiveNumber);
    };

    auto* mt = app.add_subcommand("verify-mt", "compare the horizontal and vertical dilogarithm products");
    grid_opts(mt);
    mt->add_option("--box", box, "box, one entry per vertex or a single bound")->delimiter(',')->required();
    mt->add_option("--window", window, "t-power window");
    mt->add_option("--orders", orders, "canonical or random:R");
    mt->add_option("--seed", seed, "seed for random orders");
    mt->add_option("--format", format)->check(CLI::IsMember({"json", "pretty"}));

    auto* pent = app.add_subcommand("pentagon", "check the pentagon identity");
    pent->add_option("--box", box)->delimiter(',')->required();
    pent->add_option("--window", window);
    pent->add_option("--format", format)->check(CLI::IsMember({"json", "pretty"}));

    auto* k55 = app.add_subcommand("keller55", "check the 55-term identity");
    k55->add_option("--gamma", gamma)->delimiter(',')->required();
    k55->add_option("--window", window);
    k55->add_option("--format", format)->check(CLI::IsMember({"json", "pretty"}));

    auto* betti = app.add_subcommand("betti", "Betti table of both stratifications");
    grid_opts(betti);
    betti->add_option("--gamma", gamma)->delimiter(',')->required();
    betti->add_option("--window", window);
    betti->add_option("--layout", layout)->check(CLI::IsMember({"figure", "shifted"}));
    betti->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "pretty"}));

    auto* dt = app.add_subcommand("dt", "common value of both products");
    grid_opts(dt);
    dt->add_option("--box", box)->delimiter(',')->required();
    dt->add_option("--window", window);
    dt->add_option("--format", format)->check(CLI::IsMember({"json"}));

    auto* strata = app.add_subcommand("strata", "strata table");
    grid_opts(strata);
    strata->add_option("--gamma", gamma)->delimiter(',')->required();
    strata->add_option("--axis", axis_name);
    strata->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "pretty"}));

    auto* roots = app.add_subcommand("roots", "canonical root order and order matrices");
    grid_opts(roots);
    roots->add_option("--axis", axis_name);
    roots->add_option("--format", format)->check(CLI::IsMember({"json", "pretty"}));

    auto* nf = app.add_subcommand("normal-form", "normal form of a Kostant partition");
    nf->add_option("--orientation", orientation, "e.g. rrl for 1->2->3<-4")->required();
    nf->add_option("--gamma", gamma)->delimiter(',');
    nf->add_option("--kostant", kostant, "multiplicities: non-simple intervals lexicographically, then simple ones")
        ->delimiter(',')
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*mt) {
            MtOptions opt;
            opt.seed = seed;
            if (orders.rfind("random:", 0) == 0)
                opt.random_orders = std::stoi(orders.substr(7));
            else if (orders != "canonical")
                throw Error("--orders expects canonical or random:R");
            return report(check_theorem_mt(n, nprime, to_dims(box, n * nprime), window, opt), format);
        }
        if (*pent) return report(check_pentagon(to_dims(box, 2), window), format);
        if (*k55) return report(check_55_keller(to_dims(gamma, 4), window), format);
        if (*betti) {
            GridQuiver gq(n, nprime);
            BettiTable t = betti_table(gq, to_dims(gamma, gq.vertex_count()), window,
                                       layout == "figure" ? BettiLayout::Figure : BettiLayout::Shifted);
            if (format == "csv")
                std::cout << betti_csv(t);
            else if (format == "json")
                std::cout << betti_json(t).dump(2) << "\n";
            else
                std::cout << betti_pretty(t);
            return 0;
        }
        if (*dt) {
            GridQuiver gq(n, nprime);
            AlgebraElement e = dt_invariant(n, nprime, to_dims(box, gq.vertex_count()), window);
            std::cout << element_json(e).dump(2) << "\n";
            return 0;
        }
        if (*strata) {
            GridQuiver gq(n, nprime);
            DimVector g = to_dims(gamma, gq.vertex_count());
            Axis axis = parse_axis(axis_name);
            if (format == "csv")
                std::cout << strata_csv(gq, g, axis);
            else if (format == "json")
                std::cout << strata_json(gq, g, axis).dump(2) << "\n";
            else
                std::cout << strata_pretty(gq, g, axis);
            return 0;
        }
        if (*roots) {
            GridQuiver gq(n, nprime);
            Axis axis = parse_axis(axis_name);
            if (format == "json") {
                Json j = Json::array();
                for (const GridRoot& r : canonical_order(gq, axis).sequence) j.push_back(root_json(r));
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << roots_pretty(gq, axis);
            }
            return 0;
        }
        if (*nf) {
            LineOrientation o = LineOrientation::parse(orientation);
            KostantPartition kp{o.size(), kostant};
            if (static_cast<int>(kostant.size()) != o.size() * (o.size() + 1) / 2)
                throw Error("--kostant needs " + std::to_string(o.size() * (o.size() + 1) / 2) + " entries");
            if (!gamma.empty() && kp.dimension() != to_dims(gamma, o.size()))
                throw Error("Kostant partition does not have dimension vector " + format_dims(to_dims(gamma, o.size())));
            std::cout << normal_form_pretty(normal_form(o, kp));
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
