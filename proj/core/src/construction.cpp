#include "girth4/construction.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "girth4/serialize.hpp"
#include "girth4/theta.hpp"
#include "girth4/verification.hpp"

namespace girth4 {

namespace {

// Representative of a 1-based index modulo 2k, in 1..2k.
int rep(int a, int k) {
    int m = 2 * k;
    return ((a - 1) % m + m) % m + 1;
}

int ceil_half(int k) { return (k + 1) / 2; }
int ceil_three_halves(int k) { return (3 * k + 1) / 2; }

} // namespace

ZigZag::ZigZag(int k_, int i) : k(k_), base(i) {
    if (k < 1)
        throw std::invalid_argument("k must be at least 1");
    sequence.resize(static_cast<std::size_t>(2 * k));
    sequence[0] = rep(i, k);
    for (int j = 1; j <= k; ++j) {
        sequence[static_cast<std::size_t>(2 * j - 1)] = rep(i + j, k);
        if (2 * j < 2 * k)
            sequence[static_cast<std::size_t>(2 * j)] = rep(i - j, k);
    }
}

VertexMap::VertexMap(int k, bool with_xy) : k_(k), with_xy_(with_xy) {
    if (k < 1)
        throw std::invalid_argument("k must be at least 1");
}

int VertexMap::unprimed(int j) const {
    if (j < 1 || j > 2 * k_)
        throw std::out_of_range("label index out of range");
    return j - 1;
}

int VertexMap::primed(int j) const {
    if (j < 1 || j > 2 * k_)
        throw std::out_of_range("label index out of range");
    return 2 * k_ + j - 1;
}

int VertexMap::x() const {
    if (!with_xy_)
        throw std::logic_error("map has no x vertex");
    return 4 * k_;
}

int VertexMap::y() const {
    if (!with_xy_)
        throw std::logic_error("map has no y vertex");
    return 4 * k_ + 1;
}

std::string VertexMap::label(int id) const {
    if (id >= 0 && id < 2 * k_)
        return "v" + std::to_string(id + 1);
    if (id >= 2 * k_ && id < 4 * k_)
        return "v'" + std::to_string(id - 2 * k_ + 1);
    if (with_xy_ && id == 4 * k_)
        return "x";
    if (with_xy_ && id == 4 * k_ + 1)
        return "y";
    throw std::out_of_range("vertex id out of range");
}

std::vector<std::vector<Edge>> hamiltonian_factorization(int k) {
    if (k < 1)
        throw std::invalid_argument("k must be at least 1");
    std::vector<std::vector<Edge>> paths;
    paths.reserve(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) {
        ZigZag z(k, i);
        std::vector<Edge> edges;
        edges.reserve(static_cast<std::size_t>(2 * k - 1));
        for (std::size_t j = 0; j + 1 < z.sequence.size(); ++j)
            edges.push_back(make_edge(z.sequence[j] - 1, z.sequence[j + 1] - 1));
        std::sort(edges.begin(), edges.end());
        paths.push_back(std::move(edges));
    }
    return paths;
}

Decomposition build_case_4k(int k) {
    if (k < 2)
        throw std::invalid_argument("k must be at least 2");
    VertexMap vm(k);
    Decomposition d{4 * k, {}, 4, true};
    for (int i = 1; i <= k; ++i) {
        ZigZag z(k, i);
        std::vector<Edge> part;
        part.reserve(static_cast<std::size_t>(8 * k - 4));
        for (std::size_t j = 0; j + 1 < z.sequence.size(); ++j) {
            int a = z.sequence[j];
            int b = z.sequence[j + 1];
            // The full K_{2,2} between pair classes {v_a, v'_a} and {v_b, v'_b}:
            // one edge from each Hamiltonian path copy plus the two cross edges.
            part.push_back(make_edge(vm.unprimed(a), vm.unprimed(b)));
            part.push_back(make_edge(vm.primed(a), vm.primed(b)));
            part.push_back(make_edge(vm.unprimed(a), vm.primed(b)));
            part.push_back(make_edge(vm.primed(a), vm.unprimed(b)));
        }
        std::sort(part.begin(), part.end());
        d.parts.push_back(std::move(part));
    }
    std::vector<Edge> matching;
    matching.reserve(static_cast<std::size_t>(2 * k));
    for (int j = 1; j <= 2 * k; ++j)
        matching.push_back(make_edge(vm.unprimed(j), vm.primed(j)));
    std::sort(matching.begin(), matching.end());
    d.parts.push_back(std::move(matching));
    return d;
}

namespace {

struct XyAttachment {
    char host;    // 'x' or 'y'
    bool primed;  // attach to v'_* instead of v_*
    int delta;    // added to the subcase base index
};

// The four edges added to G_i, keyed by (k parity, i parity, parity of
// ceil(k/2)). Base index: i + ceil(3k/2) for odd i, i + ceil(k/2) for even i.
// Odd-ceil rows are the even-ceil rows with x and y swapped.
const std::array<XyAttachment, 4>& xy_attachments(bool k_odd, bool i_odd, bool ck2_even) {
    static const std::array<XyAttachment, 4> k_odd_i_odd_even = {
        {{'x', true, -1}, {'x', false, 0}, {'y', false, -1}, {'y', true, 0}}};
    static const std::array<XyAttachment, 4> k_odd_i_odd_odd = {
        {{'y', true, -1}, {'y', false, 0}, {'x', false, -1}, {'x', true, 0}}};
    static const std::array<XyAttachment, 4> k_odd_i_even_even = {
        {{'x', true, -1}, {'x', false, 0}, {'y', false, -1}, {'y', true, 0}}};
    static const std::array<XyAttachment, 4> k_odd_i_even_odd = {
        {{'y', true, -1}, {'y', false, 0}, {'x', false, -1}, {'x', true, 0}}};
    static const std::array<XyAttachment, 4> k_even_i_odd_even = {
        {{'x', false, 1}, {'x', true, 0}, {'y', true, 1}, {'y', false, 0}}};
    static const std::array<XyAttachment, 4> k_even_i_odd_odd = {
        {{'y', false, 1}, {'y', true, 0}, {'x', true, 1}, {'x', false, 0}}};
    static const std::array<XyAttachment, 4> k_even_i_even_even = {
        {{'x', false, 0}, {'x', true, -1}, {'y', true, 0}, {'y', false, -1}}};
    static const std::array<XyAttachment, 4> k_even_i_even_odd = {
        {{'y', false, 0}, {'y', true, -1}, {'x', true, 0}, {'x', false, -1}}};
    if (k_odd)
        return i_odd ? (ck2_even ? k_odd_i_odd_even : k_odd_i_odd_odd)
                     : (ck2_even ? k_odd_i_even_even : k_odd_i_even_odd);
    return i_odd ? (ck2_even ? k_even_i_odd_even : k_even_i_odd_odd)
                 : (ck2_even ? k_even_i_even_even : k_even_i_even_odd);
}

} // namespace

Decomposition build_case_4k_plus_2(int k) {
    if (k == 2)
        throw excluded_case_error("n = 10 is the excluded case; no direct construction");
    if (k < 3)
        throw std::invalid_argument("k must be at least 3");
    Decomposition base = build_case_4k(k);
    VertexMap vm(k, true);
    Decomposition d{4 * k + 2, {}, 4, true};
    const bool k_odd = k % 2 == 1;
    const bool ck2_even = ceil_half(k) % 2 == 0;
    for (int i = 1; i <= k; ++i) {
        std::vector<Edge> part = base.parts[static_cast<std::size_t>(i - 1)];
        const bool i_odd = i % 2 == 1;
        const int base_index = i + (i_odd ? ceil_three_halves(k) : ceil_half(k));
        for (const XyAttachment& a : xy_attachments(k_odd, i_odd, ck2_even)) {
            int host = a.host == 'x' ? vm.x() : vm.y();
            int j = rep(base_index + a.delta, k);
            part.push_back(make_edge(host, a.primed ? vm.primed(j) : vm.unprimed(j)));
        }
        std::sort(part.begin(), part.end());
        d.parts.push_back(std::move(part));
    }
    std::vector<Edge> last = base.parts[static_cast<std::size_t>(k)];
    last.push_back(make_edge(vm.x(), vm.y()));
    for (int j = 1; j <= 2 * k; ++j) {
        if (j % 2 == 1) {
            last.push_back(make_edge(vm.x(), vm.unprimed(j)));
            last.push_back(make_edge(vm.y(), vm.primed(j)));
        } else {
            last.push_back(make_edge(vm.x(), vm.primed(j)));
            last.push_back(make_edge(vm.y(), vm.unprimed(j)));
        }
    }
    std::sort(last.begin(), last.end());
    d.parts.push_back(std::move(last));
    return d;
}

Decomposition restrict_to_prefix(const Decomposition& d, int new_n) {
    if (new_n < 0 || new_n > d.n)
        throw std::invalid_argument("restricted order out of range");
    Decomposition out{new_n, {}, d.girth_claim, d.optimal};
    for (const auto& part : d.parts) {
        std::vector<Edge> kept;
        for (const Edge& e : part)
            if (e.second < new_n)
                kept.push_back(e);
        if (kept.empty() && !part.empty())
            throw std::logic_error("restriction emptied a part");
        out.parts.push_back(std::move(kept));
    }
    return out;
}

namespace {

Decomposition load_fixture(int n, const std::filesystem::path& dir) {
    std::filesystem::path file = dir / ("k" + std::to_string(n) + ".json");
    std::ifstream in(file);
    if (!in)
        throw std::runtime_error("cannot open fixture " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    Decomposition d = decomposition_from_json(buf.str());
    if (d.n != n)
        throw std::runtime_error("fixture " + file.string() + " has wrong order");
    if (static_cast<int>(d.parts.size()) != theta4(n).upper())
        throw std::runtime_error("fixture " + file.string() + " has wrong part count");
    if (!verify(d).ok)
        throw std::runtime_error("fixture " + file.string() + " failed verification");
    return d;
}

} // namespace

Decomposition decompose(int n, const std::filesystem::path& fixtures_dir) {
    if (n < 1)
        throw std::invalid_argument("order must be positive");
    if (n <= 6 || n == 9)
        return load_fixture(n, fixtures_dir);
    if (n == 10) {
        Decomposition d = restrict_to_prefix(build_case_4k(3), 10);
        d.optimal = false;
        return d;
    }
    switch (n % 4) {
    case 0:
        return build_case_4k(n / 4);
    case 3:
        return restrict_to_prefix(build_case_4k((n + 1) / 4), n);
    case 2:
        return build_case_4k_plus_2((n - 2) / 4);
    default:
        return restrict_to_prefix(build_case_4k_plus_2((n - 1) / 4), n);
    }
}

} // namespace girth4
