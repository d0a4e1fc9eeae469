#include "interdep/model.hpp"

#include "interdep/mincut.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace interdep {

Coalition SecurityNetwork::neighbors(NodeId i) const {
    Coalition nb(n());
    for (int a : in_arcs[i]) nb.add(arcs[a].from);
    for (int a : out_arcs[i]) nb.add(arcs[a].to);
    return nb;
}

void SecurityNetwork::rebuild_adjacency() {
    in_arcs.assign(n(), {});
    out_arcs.assign(n(), {});
    for (int a = 0; a < m(); ++a) {
        out_arcs[arcs[a].from].push_back(a);
        in_arcs[arcs[a].to].push_back(a);
    }
}

void SecurityNetwork::validate() const {
    const int nn = n();
    if (int(penalty.size()) != nn || int(labels.size()) != nn)
        throw ValidationError("node attribute arrays disagree on length");
    for (int i = 0; i < nn; ++i) {
        if (theta[i] < 0) throw ValidationError("negative theta for node '" + labels[i] + "'");
        if (penalty[i] < 0) throw ValidationError("negative L for node '" + labels[i] + "'");
    }
    std::set<std::pair<int, int>> seen;
    for (const Arc& a : arcs) {
        if (a.from < 0 || a.from >= nn || a.to < 0 || a.to >= nn)
            throw ValidationError("arc references unknown node");
        if (a.from == a.to)
            throw ValidationError("self-loop on node '" + labels[a.from] + "'");
        if (a.xi < 0)
            throw ValidationError("negative xi on arc " + labels[a.from] + "->" + labels[a.to]);
        if (!seen.insert({a.from, a.to}).second)
            throw ValidationError("duplicate arc " + labels[a.from] + "->" + labels[a.to]);
    }
    if (public_set.universe() != nn) throw ValidationError("public set universe mismatch");
}

SecurityNetwork make_network(std::vector<double> theta, std::vector<double> penalty,
                             std::vector<Arc> arcs, std::vector<std::string> labels) {
    SecurityNetwork net;
    net.theta = std::move(theta);
    net.penalty = std::move(penalty);
    net.arcs = std::move(arcs);
    if (labels.empty())
        for (int i = 0; i < int(net.theta.size()); ++i) labels.push_back(std::to_string(i));
    net.labels = std::move(labels);
    net.public_set = Coalition(net.n());
    net.rebuild_adjacency();
    net.validate();
    return net;
}

PartitionStructure PartitionStructure::singletons(int n) {
    PartitionStructure p;
    for (int i = 0; i < n; ++i) p.blocks.push_back(Coalition::of(n, {i}));
    return p;
}

PartitionStructure PartitionStructure::grand(int n) {
    return PartitionStructure{{Coalition::all(n)}};
}

PartitionStructure PartitionStructure::split(const Coalition& s, bool singleton_residuals) {
    PartitionStructure p;
    p.blocks.push_back(s);
    Coalition rest = s.complement();
    if (singleton_residuals) {
        for (int i : rest.members()) p.blocks.push_back(Coalition::of(s.universe(), {i}));
    } else if (!rest.empty()) {
        p.blocks.push_back(rest);
    }
    return p;
}

void PartitionStructure::validate(int n) const {
    Coalition seen(n);
    for (const Coalition& b : blocks) {
        if (b.universe() != n) throw ValidationError("partition block universe mismatch");
        if (b.empty()) throw ValidationError("empty partition block");
        if (seen.intersects(b)) throw ValidationError("overlapping partition blocks");
        seen |= b;
    }
    if (!seen.is_full()) throw ValidationError("partition does not cover all nodes");
}

int PartitionStructure::find_block(const Coalition& s) const {
    for (int k = 0; k < int(blocks.size()); ++k)
        if (blocks[k] == s) return k;
    return -1;
}

std::vector<std::uint8_t> security_state(const SecurityNetwork& net, const SecurityProfile& p,
                                         const std::vector<std::uint8_t>& beliefs) {
    std::vector<std::uint8_t> sigma(net.n(), 0);
    for (int i = 0; i < net.n(); ++i) {
        if (!p.x[i]) continue;
        bool ok = true;
        for (int a : net.in_arcs[i])
            if (!beliefs[a] && !p.y[a]) { ok = false; break; }
        sigma[i] = ok;
    }
    return sigma;
}

double player_cost(const SecurityNetwork& net, const SecurityProfile& p,
                   const std::vector<std::uint8_t>& beliefs, NodeId i) {
    std::vector<std::uint8_t> sigma = security_state(net, p, beliefs);
    double c = net.penalty[i] * (sigma[i] ? 0.0 : 1.0) + net.theta[i] * (p.x[i] ? 1.0 : 0.0);
    for (int a : net.in_arcs[i])
        if (p.y[a]) c += net.arcs[a].xi;
    return c;
}

std::vector<std::uint8_t> consistent_states(const SecurityNetwork& net, const SecurityProfile& p) {
    // risk originates at unsecured-intrinsic players and spreads along
    // unprotected links; start from x and peel every exposed player
    std::vector<std::uint8_t> sigma = p.x;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < net.n(); ++i) {
            if (!sigma[i]) continue;
            for (int a : net.in_arcs[i])
                if (!sigma[net.arcs[a].from] && !p.y[a]) {
                    sigma[i] = 0;
                    changed = true;
                    break;
                }
        }
    }
    return sigma;
}

ReductionResult reduce_network(const SecurityNetwork& net) {
    SecurityNetwork cur = net;
    std::vector<int> orig(net.n());
    for (int i = 0; i < net.n(); ++i) orig[i] = i;
    Coalition removed(net.n());

    for (;;) {
        flow::CutResult cut = flow::min_cut(flow::build_auxiliary(cur), Coalition(cur.n()));
        Coalition secured = cut.sink_players;
        if (secured.is_full()) break;

        // fold dropped players' outgoing xi into the surviving heads' theta
        std::vector<int> new_id(cur.n(), -1);
        SecurityNetwork next;
        std::vector<int> next_orig;
        for (int i : secured.members()) {
            new_id[i] = next.n();
            next.labels.push_back(cur.labels[i]);
            next.theta.push_back(cur.theta[i]);
            next.penalty.push_back(cur.penalty[i]);
            next_orig.push_back(orig[i]);
        }
        for (int i = 0; i < cur.n(); ++i)
            if (!secured.contains(i)) removed.add(orig[i]);
        for (const Arc& a : cur.arcs) {
            bool fs = secured.contains(a.from), ts = secured.contains(a.to);
            if (fs && ts)
                next.arcs.push_back({new_id[a.from], new_id[a.to], a.xi});
            else if (!fs && ts)
                next.theta[new_id[a.to]] += a.xi; // permanent worst-case link cost
        }
        next.public_set = Coalition(next.n());
        for (int j = 0; j < next.n(); ++j)
            if (net.public_set.contains(next_orig[j])) next.public_set.add(j);
        next.rebuild_adjacency();
        cur = std::move(next);
        orig = std::move(next_orig);
        if (cur.n() == 0) break;
    }
    return ReductionResult{std::move(cur), std::move(removed), std::move(orig)};
}

// --- JSON ------------------------------------------------------------------

using json = nlohmann::ordered_json;

SecurityNetwork load_network(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const std::exception& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("nodes") || !doc["nodes"].is_array())
        throw ValidationError("document must contain a 'nodes' array");

    struct NodeRec { double theta, L; };
    std::map<std::string, NodeRec> nodes;
    for (const auto& jn : doc["nodes"]) {
        if (!jn.contains("id") || !jn["id"].is_string())
            throw ValidationError("node without string 'id'");
        std::string id = jn["id"].get<std::string>();
        if (!jn.contains("theta") || !jn["theta"].is_number())
            throw ValidationError("node '" + id + "' missing numeric 'theta'");
        if (!jn.contains("L") || !jn["L"].is_number())
            throw ValidationError("node '" + id + "' missing numeric 'L'");
        if (nodes.count(id)) throw ValidationError("duplicate node id '" + id + "'");
        nodes[id] = {jn["theta"].get<double>(), jn["L"].get<double>()};
    }

    SecurityNetwork net;
    std::map<std::string, int> ids; // std::map iterates in sorted label order
    for (const auto& [label, rec] : nodes) {
        ids[label] = net.n();
        net.labels.push_back(label);
        net.theta.push_back(rec.theta);
        net.penalty.push_back(rec.L);
    }
    if (doc.contains("arcs")) {
        if (!doc["arcs"].is_array()) throw ValidationError("'arcs' must be an array");
        for (const auto& ja : doc["arcs"]) {
            for (const char* key : {"from", "to"})
                if (!ja.contains(key) || !ja[key].is_string())
                    throw ValidationError("arc missing string '" + std::string(key) + "'");
            std::string f = ja["from"].get<std::string>(), t = ja["to"].get<std::string>();
            if (!ids.count(f)) throw ValidationError("arc references unknown node '" + f + "'");
            if (!ids.count(t)) throw ValidationError("arc references unknown node '" + t + "'");
            if (!ja.contains("xi") || !ja["xi"].is_number())
                throw ValidationError("arc " + f + "->" + t + " missing numeric 'xi'");
            net.arcs.push_back({ids[f], ids[t], ja["xi"].get<double>()});
        }
    }
    net.public_set = Coalition(net.n());
    if (doc.contains("public")) {
        if (!doc["public"].is_array()) throw ValidationError("'public' must be an array");
        for (const auto& jp : doc["public"]) {
            if (!jp.is_string()) throw ValidationError("'public' entries must be node ids");
            std::string id = jp.get<std::string>();
            if (!ids.count(id)) throw ValidationError("public set references unknown node '" + id + "'");
            net.public_set.add(ids[id]);
        }
    }
    net.rebuild_adjacency();
    net.validate();
    return net;
}

SecurityNetwork load_network_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_network(ss.str());
}

std::string serialize_network(const SecurityNetwork& net) {
    json doc;
    // nodes come out in label-sorted order because internal ids are assigned that way
    std::vector<int> order(net.n());
    for (int i = 0; i < net.n(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return net.labels[a] < net.labels[b]; });
    doc["nodes"] = json::array();
    for (int i : order) {
        json jn;
        jn["id"] = net.labels[i];
        jn["theta"] = net.theta[i];
        jn["L"] = net.penalty[i];
        doc["nodes"].push_back(jn);
    }
    doc["arcs"] = json::array();
    std::vector<int> arc_order(net.m());
    for (int a = 0; a < net.m(); ++a) arc_order[a] = a;
    std::sort(arc_order.begin(), arc_order.end(), [&](int a, int b) {
        auto ka = std::make_pair(net.labels[net.arcs[a].from], net.labels[net.arcs[a].to]);
        auto kb = std::make_pair(net.labels[net.arcs[b].from], net.labels[net.arcs[b].to]);
        return ka < kb;
    });
    for (int a : arc_order) {
        json ja;
        ja["from"] = net.labels[net.arcs[a].from];
        ja["to"] = net.labels[net.arcs[a].to];
        ja["xi"] = net.arcs[a].xi;
        doc["arcs"].push_back(ja);
    }
    if (!net.public_set.empty()) {
        doc["public"] = json::array();
        std::vector<std::string> pub;
        for (int i : net.public_set.members()) pub.push_back(net.labels[i]);
        std::sort(pub.begin(), pub.end());
        for (const auto& s : pub) doc["public"].push_back(s);
    }
    return doc.dump(2);
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::uint64_t network_hash(const SecurityNetwork& net) { return fnv1a(serialize_network(net)); }

} // namespace interdep
