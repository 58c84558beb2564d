#include "improper/families.hpp"

#include "improper/errors.hpp"
#include "improper/interval.hpp"

namespace improper {

namespace {

class Builder {
public:
    Vertex add(std::string label) {
        labels_.push_back(std::move(label));
        return static_cast<Vertex>(labels_.size() - 1);
    }

    std::vector<Vertex> add_clique(const std::string& name, int size) {
        std::vector<Vertex> members;
        for (int i = 0; i < size; ++i) members.push_back(add(name + "[" + std::to_string(i) + "]"));
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) join(members[i], members[j]);
        }
        return members;
    }

    void join(Vertex u, Vertex v) { edges_.emplace_back(u, v); }

    void join_all(Vertex u, const std::vector<Vertex>& vs) {
        for (Vertex v : vs) join(u, v);
    }

    Graph graph() const { return Graph(labels_.size(), edges_); }
    const std::vector<std::string>& labels() const { return labels_; }

private:
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidParameters(what);
}

}  // namespace

FamilyInstance gen_fig2(int p, int n) {
    require(p >= 1, "fig2: p must be >= 1");
    require(0 <= n && n <= p - 1, "fig2: n must satisfy 0 <= n <= p-1");
    Builder b;
    const Vertex base = b.add("b");
    const Vertex x1 = b.add("x1");
    const Vertex x2 = b.add("x2");
    const Vertex x3 = b.add("x3");
    b.join(x1, x2);
    b.join(x1, x3);
    b.join(x2, x3);
    b.join(x2, base);
    b.join(x3, base);
    auto kn = b.add_clique("Kn", n);
    for (Vertex v : kn) {
        b.join(v, x3);
        b.join(v, base);
    }
    auto kpn = b.add_clique("Kp-n", p - n);
    b.join_all(base, kpn);
    const Vertex y1 = b.add("y1");
    const Vertex y2 = b.add("y2");
    b.join(base, y1);
    b.join(y1, y2);

    FamilyInstance inst;
    inst.family_tag = "fig2";
    inst.params.p = p;
    inst.params.n = n;
    inst.graph = b.graph();
    inst.labels = b.labels();
    inst.designated_vertex = y1;
    inst.constructed_basepoint = base;
    inst.expected_impropriety = p;
    inst.expected_drop_value = n;
    inst.relocating = kpn;
    return inst;
}

FamilyInstance gen_fig3(int p, int n) {
    require(p >= 2, "fig3: p must be >= 2");
    require(0 <= n && n <= p / 2, "fig3: n must satisfy 0 <= n <= floor(p/2)");
    Builder b;
    const Vertex a = b.add("A");
    const Vertex bb = b.add("B");
    b.join(a, bb);
    auto q1 = b.add_clique("Q1", p - n);
    auto q2 = b.add_clique("Q2", p - n);
    auto q3 = b.add_clique("Q3", n);
    for (const auto* q : {&q1, &q2, &q3}) {
        b.join_all(a, *q);
        b.join_all(bb, *q);
    }
    const Vertex d = b.add("D");
    b.join(a, d);

    FamilyInstance inst;
    inst.family_tag = "fig3";
    inst.params.p = p;
    inst.params.n = n;
    inst.graph = b.graph();
    inst.labels = b.labels();
    inst.designated_vertex = d;
    inst.constructed_basepoint = a;
    inst.expected_impropriety = p;
    inst.expected_drop_value = n;
    inst.relocating = q2;
    return inst;
}

namespace {

FamilyInstance build_fig4(int p, int n, int s) {
    Builder b;
    const Vertex a = b.add("A");
    const Vertex d = b.add("D");
    b.join(a, d);
    auto q1 = b.add_clique("Q1", p - n);
    auto q2 = b.add_clique("Q2", p - n);
    for (const auto* q : {&q1, &q2}) {
        b.join_all(a, *q);
        b.join_all(d, *q);
    }
    for (int i = 0; i < s; ++i) b.join(a, b.add("S[" + std::to_string(i) + "]"));

    FamilyInstance inst;
    inst.family_tag = "fig4";
    inst.params.p = p;
    inst.params.n = n;
    inst.params.s = s;
    inst.graph = b.graph();
    inst.labels = b.labels();
    inst.designated_vertex = d;
    inst.constructed_basepoint = a;
    inst.expected_impropriety = p;
    inst.expected_drop_value = n;
    inst.relocating = q2;
    return inst;
}

void observe(FamilyInstance& inst, Calibration& cal) {
    cal.observed_impropriety = impropriety(inst.graph).value;
    cal.observed_drop = impropriety(delete_vertex(inst.graph, inst.designated_vertex).graph).value;
    cal.reached_target = cal.observed_impropriety == inst.expected_impropriety;
}

}  // namespace

FamilyInstance gen_fig4(int p, int n, std::optional<int> s) {
    require(p >= 2, "fig4: p must be >= 2");
    require(0 <= n && n <= p - 1, "fig4: n must satisfy 0 <= n <= p-1");
    if (s) {
        require(*s >= 0, "fig4: s must be >= 0");
        auto inst = build_fig4(p, n, *s);
        Calibration cal;
        cal.chosen_s = *s;
        observe(inst, cal);
        inst.calibration = cal;
        return inst;
    }
    for (int trial = 0; trial <= p; ++trial) {
        auto inst = build_fig4(p, n, trial);
        Calibration cal;
        cal.chosen_s = trial;
        cal.calibrated = true;
        observe(inst, cal);
        if (cal.reached_target) {
            inst.calibration = cal;
            if (cal.observed_drop != n) {
                inst.notes.push_back("calibrated s=" + std::to_string(trial) + " gives drop " +
                                     std::to_string(cal.observed_drop) + ", not " + std::to_string(n));
            }
            return inst;
        }
    }
    auto inst = build_fig4(p, n, p);
    Calibration cal;
    cal.chosen_s = p;
    cal.calibrated = true;
    observe(inst, cal);
    inst.calibration = cal;
    inst.notes.push_back("calibration failed: no s <= p reaches impropriety " + std::to_string(p));
    return inst;
}

FamilyInstance gen_fig5(int p) {
    require(p >= 8, "fig5: p must be >= 8");
    Builder b;
    const Vertex a = b.add("A");
    for (const char* name : {"Lout", "Lin", "Rout"}) b.join_all(a, b.add_clique(name, 3));
    const Vertex m1 = b.add("m1");
    const Vertex m2 = b.add("m2");
    const Vertex d = b.add("D");
    b.join_all(a, {m1, m2, d});
    b.join_all(m1, {m2, d});
    auto q = b.add_clique("Q", p - 6);
    b.join_all(a, q);
    b.join_all(m1, q);

    FamilyInstance inst;
    inst.family_tag = "fig5";
    inst.params.p = p;
    inst.params.n = 7;
    inst.graph = b.graph();
    inst.labels = b.labels();
    inst.designated_vertex = d;
    inst.constructed_basepoint = a;
    inst.expected_impropriety = p;
    inst.expected_drop_value = 7;
    inst.relocating = q;
    return inst;
}

Graph gen_qproper_obstruction(int q) {
    require(q >= 0, "qobstruction: q must be >= 0");
    Builder b;
    auto centre = b.add_clique("C", q + 1);
    for (int i = 0; i < 3; ++i) {
        const Vertex leaf = b.add("l" + std::to_string(i + 1));
        b.join_all(leaf, centre);
    }
    return b.graph();
}

Graph gen_clique_leaf_claw(int q) {
    require(q >= 0, "cliqueleaf: q must be >= 0");
    Builder b;
    const Vertex c = b.add("c");
    b.join(c, b.add("l1"));
    b.join(c, b.add("l2"));
    b.join_all(c, b.add_clique("K", q + 1));
    return b.graph();
}

Graph gen_clique(int k) {
    require(k >= 1, "clique: k must be >= 1");
    Builder b;
    b.add_clique("v", k);
    return b.graph();
}

Graph gen_path(int k) {
    require(k >= 1, "path: k must be >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    return Graph(static_cast<std::size_t>(k), edges);
}

Graph gen_star(int k) {
    require(k >= 1, "star: k must be >= 1");
    std::vector<Edge> edges;
    for (int i = 1; i <= k; ++i) edges.emplace_back(0, i);
    return Graph(static_cast<std::size_t>(k + 1), edges);
}

FamilyInstance make_family(const std::string& tag, const FamilyParams& params) {
    if (tag == "fig2") return gen_fig2(params.p, params.n);
    if (tag == "fig3") return gen_fig3(params.p, params.n);
    if (tag == "fig4") return gen_fig4(params.p, params.n, params.s);
    if (tag == "fig5") return gen_fig5(params.p);

    FamilyInstance inst;
    inst.family_tag = tag;
    inst.params = params;
    if (tag == "qobstruction") {
        inst.graph = gen_qproper_obstruction(params.q);
    } else if (tag == "cliqueleaf") {
        inst.graph = gen_clique_leaf_claw(params.q);
    } else if (tag == "clique") {
        inst.graph = gen_clique(params.k);
    } else if (tag == "path") {
        inst.graph = gen_path(params.k);
    } else if (tag == "star") {
        inst.graph = gen_star(params.k);
    } else {
        throw InvalidParameters("unknown family '" + tag + "'");
    }
    inst.labels.resize(inst.graph.vertex_count());
    for (std::size_t v = 0; v < inst.labels.size(); ++v) inst.labels[v] = std::to_string(v);
    return inst;
}

}  // namespace improper
