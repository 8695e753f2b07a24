#include "lpemb/serialize.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace lpemb {

namespace {

using nlohmann::json;

json node_to_json(const TreeNode& node) { return json(node); }

TreeNode node_from_json(const json& j) {
    TreeNode node;
    for (const auto& v : j) node.push_back(v.get<std::uint32_t>());
    return node;
}

json spec_to_json(const StableSpec& spec) {
    return json{{"r", spec.r},
                {"sigma", spec.sigma},
                {"field", spec.field == ScalarField::Real ? "real" : "complex"}};
}

StableSpec spec_from_json(const json& j) {
    StableSpec spec;
    spec.r = j.at("r").get<double>();
    spec.sigma = j.at("sigma").get<double>();
    spec.field = j.at("field").get<std::string>() == "real" ? ScalarField::Real
                                                            : ScalarField::Complex;
    return spec;
}

}  // namespace

std::string to_record(const DyadicStep& f) {
    json j{{"field", "real"}, {"level", f.level()}, {"values", f.values()}};
    return j.dump();
}

std::string to_record(const DyadicStepC& f) {
    json values = json::array();
    for (const auto& z : f.values()) values.push_back(json::array({z.real(), z.imag()}));
    json j{{"field", "complex"}, {"level", f.level()}, {"values", values}};
    return j.dump();
}

ScalarField record_field(const std::string& record) {
    const json j = json::parse(record);
    return j.at("field").get<std::string>() == "real" ? ScalarField::Real : ScalarField::Complex;
}

DyadicStep dyadic_real_from_record(const std::string& record) {
    const json j = json::parse(record);
    if (j.at("field").get<std::string>() != "real")
        throw std::invalid_argument("dyadic record: expected real field");
    return DyadicStep(j.at("level").get<int>(), j.at("values").get<std::vector<double>>());
}

DyadicStepC dyadic_complex_from_record(const std::string& record) {
    const json j = json::parse(record);
    if (j.at("field").get<std::string>() != "complex")
        throw std::invalid_argument("dyadic record: expected complex field");
    std::vector<std::complex<double>> values;
    for (const auto& pair : j.at("values"))
        values.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
    return DyadicStepC(j.at("level").get<int>(), std::move(values));
}

std::string to_record(const FiniteTree& tree) {
    json nodes = json::array();
    for (const TreeNode& node : tree.nodes()) nodes.push_back(node_to_json(node));
    return json{{"nodes", nodes}}.dump();
}

FiniteTree tree_from_record(const std::string& record) {
    const json j = json::parse(record);
    std::vector<TreeNode> nodes;
    for (const auto& n : j.at("nodes")) nodes.push_back(node_from_json(n));
    return FiniteTree::from_nodes(nodes);
}

std::string to_record(const Disintegration<DyadicStep>& d) {
    json assign = json::array();
    for (const TreeNode& node : d.tree.nodes()) {
        const DyadicStep& f = d.at(node);
        assign.push_back(json{{"node", node_to_json(node)},
                              {"level", f.level()},
                              {"values", f.values()}});
    }
    return json{{"p", d.p}, {"assign", assign}}.dump();
}

Disintegration<DyadicStep> disintegration_from_record(const std::string& record) {
    const json j = json::parse(record);
    Disintegration<DyadicStep> d;
    d.p = j.at("p").get<double>();
    std::vector<TreeNode> nodes;
    for (const auto& entry : j.at("assign")) {
        TreeNode node = node_from_json(entry.at("node"));
        d.assign.emplace(node, DyadicStep(entry.at("level").get<int>(),
                                          entry.at("values").get<std::vector<double>>()));
        nodes.push_back(std::move(node));
    }
    d.tree = FiniteTree::from_nodes(nodes);
    return d;
}

std::string to_record(const TreeIso& iso) {
    json pairs = json::array();
    for (const auto& [from, to] : iso.map)
        pairs.push_back(json::array({node_to_json(from), node_to_json(to)}));
    return json{{"pairs", pairs}}.dump();
}

TreeIso tree_iso_from_record(const std::string& record) {
    const json j = json::parse(record);
    TreeIso iso;
    for (const auto& pair : j.at("pairs"))
        iso.map[node_from_json(pair.at(0))] = node_from_json(pair.at(1));
    return iso;
}

namespace {

json sample_header(const StableSpec& spec, std::size_t n, std::uint64_t seed,
                   std::int64_t stream_id) {
    json j = spec_to_json(spec);
    j["N"] = n;
    j["seed"] = seed;
    j["stream_id"] = stream_id;
    return j;
}

void read_header(std::istream& in, json& j) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("sample column: missing header");
    j = json::parse(line);
}

}  // namespace

void write_samples_binary(std::ostream& out, const SampleVector& sv) {
    out << sample_header(sv.spec, sv.size(), sv.seed, sv.stream_id).dump() << '\n';
    out.write(reinterpret_cast<const char*>(sv.samples.data()),
              static_cast<std::streamsize>(sv.samples.size() * sizeof(double)));
}

void write_samples_binary(std::ostream& out, const SampleVectorC& sv) {
    out << sample_header(sv.spec, sv.size(), sv.seed, sv.stream_id).dump() << '\n';
    out.write(reinterpret_cast<const char*>(sv.samples.data()),
              static_cast<std::streamsize>(sv.samples.size() * 2 * sizeof(double)));
}

SampleVector read_samples_binary_real(std::istream& in) {
    json j;
    read_header(in, j);
    SampleVector sv;
    sv.spec = spec_from_json(j);
    sv.seed = j.at("seed").get<std::uint64_t>();
    sv.stream_id = j.at("stream_id").get<std::int64_t>();
    sv.samples.resize(j.at("N").get<std::size_t>());
    in.read(reinterpret_cast<char*>(sv.samples.data()),
            static_cast<std::streamsize>(sv.samples.size() * sizeof(double)));
    if (!in) throw std::runtime_error("sample column: truncated data");
    return sv;
}

SampleVectorC read_samples_binary_complex(std::istream& in) {
    json j;
    read_header(in, j);
    SampleVectorC sv;
    sv.spec = spec_from_json(j);
    sv.seed = j.at("seed").get<std::uint64_t>();
    sv.stream_id = j.at("stream_id").get<std::int64_t>();
    sv.samples.resize(j.at("N").get<std::size_t>());
    in.read(reinterpret_cast<char*>(sv.samples.data()),
            static_cast<std::streamsize>(sv.samples.size() * 2 * sizeof(double)));
    if (!in) throw std::runtime_error("sample column: truncated data");
    return sv;
}

std::string samples_to_csv(const SampleVector& sv) {
    std::ostringstream out;
    out << "index,value\n";
    for (std::size_t i = 0; i < sv.samples.size(); ++i) {
        out << i << ',' << json(sv.samples[i]).dump() << '\n';
    }
    return out.str();
}

std::string samples_to_csv(const SampleVectorC& sv) {
    std::ostringstream out;
    out << "index,re,im\n";
    for (std::size_t i = 0; i < sv.samples.size(); ++i) {
        out << i << ',' << json(sv.samples[i].real()).dump() << ','
            << json(sv.samples[i].imag()).dump() << '\n';
    }
    return out.str();
}

}  // namespace lpemb
