#include "modrep/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

namespace modrep {

namespace {

bool is_prime(int p) {
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

long long parse_int(std::string_view token, std::string_view whole) {
    token = trim(token);
    long long value = 0;
    const char *first = token.data();
    const char *last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc() || ptr != last)
        throw Error(ErrorCode::MalformedPartition,
                    "cannot read '" + std::string(token) + "' in '" +
                        std::string(whole) + "'");
    return value;
}

} // namespace

Prime::Prime(int p) : p_(p) {
    if (p == 2 || !is_prime(p))
        throw Error(ErrorCode::OddPrimeRequired,
                    "p must be an odd prime, got " + std::to_string(p));
}

std::ostream &operator<<(std::ostream &os, const Node &node) {
    return os << '(' << node.row << ',' << node.col << ')';
}

int residue_of(Node node, Prime p) {
    int r = (node.col - node.row) % p.value();
    return r < 0 ? r + p.value() : r;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] <= 0)
            throw Error(ErrorCode::NonPositivePart,
                        "part " + std::to_string(k + 1) + " is " +
                            std::to_string(parts_[k]));
        if (k > 0 && parts_[k] > parts_[k - 1])
            throw Error(ErrorCode::NotWeaklyDecreasing,
                        "part " + std::to_string(k + 1) + " (" +
                            std::to_string(parts_[k]) + ") exceeds part " +
                            std::to_string(k) + " (" +
                            std::to_string(parts_[k - 1]) + ")");
        n_ += parts_[k];
    }
}

Partition parse_partition(std::string_view text) {
    const std::string_view body = trim(text);
    if (body.empty() || body == "[]" || body == "()")
        return Partition{};

    std::string_view inner = body;
    if ((inner.front() == '(' && inner.back() == ')') ||
        (inner.front() == '[' && inner.back() == ']')) {
        inner = inner.substr(1, inner.size() - 2);
    }

    std::vector<int> parts;
    std::size_t start = 0;
    while (start <= inner.size()) {
        std::size_t comma = inner.find(',', start);
        if (comma == std::string_view::npos)
            comma = inner.size();
        std::string_view token = trim(inner.substr(start, comma - start));
        if (token.empty())
            throw Error(ErrorCode::MalformedPartition,
                        "empty part in '" + std::string(text) + "'");

        long long value = 0;
        long long reps = 1;
        if (auto caret = token.find('^'); caret != std::string_view::npos) {
            value = parse_int(token.substr(0, caret), text);
            reps = parse_int(token.substr(caret + 1), text);
            if (reps < 0)
                throw Error(ErrorCode::NegativeExponent,
                            "exponent " + std::to_string(reps) + " in '" +
                                std::string(text) + "'");
        } else {
            value = parse_int(token, text);
        }
        if (value <= 0)
            throw Error(ErrorCode::NonPositivePart,
                        "part " + std::to_string(value) + " in '" +
                            std::string(text) + "'");
        if (value > 1'000'000 || reps > 1'000'000)
            throw Error(ErrorCode::MalformedPartition,
                        "part or exponent too large in '" + std::string(text) +
                            "'");
        parts.insert(parts.end(), static_cast<std::size_t>(reps),
                     static_cast<int>(value));
        start = comma + 1;
    }
    return Partition(std::move(parts));
}

std::string format_partition(const Partition &lambda) {
    if (lambda.empty())
        return "[]";
    std::string out;
    for (int part : lambda.parts()) {
        if (!out.empty())
            out += ',';
        out += std::to_string(part);
    }
    return out;
}

std::string format_partition_exponent(const Partition &lambda) {
    if (lambda.empty())
        return "[]";
    std::string out;
    auto parts = lambda.parts();
    for (std::size_t k = 0; k < parts.size();) {
        std::size_t j = k;
        while (j < parts.size() && parts[j] == parts[k])
            ++j;
        if (!out.empty())
            out += ',';
        out += std::to_string(parts[k]);
        if (j - k > 1)
            out += '^' + std::to_string(j - k);
        k = j;
    }
    return out;
}

std::ostream &operator<<(std::ostream &os, const Partition &lambda) {
    return os << '(' << format_partition(lambda) << ')';
}

bool is_p_regular(const Partition &lambda, Prime p) {
    auto parts = lambda.parts();
    for (std::size_t k = 0; k < parts.size();) {
        std::size_t j = k;
        while (j < parts.size() && parts[j] == parts[k])
            ++j;
        if (static_cast<int>(j - k) >= p.value())
            return false;
        k = j;
    }
    return true;
}

Partition conjugate(const Partition &lambda) {
    std::vector<int> cols(lambda.empty() ? 0 : lambda.row(1), 0);
    for (int part : lambda.parts())
        for (int c = 0; c < part; ++c)
            ++cols[c];
    return Partition(std::move(cols));
}

int ResidueContent::total() const {
    return std::accumulate(counts.begin(), counts.end(), 0);
}

ResidueContent residue_content(const Partition &lambda, Prime p) {
    ResidueContent content{std::vector<int>(p.value(), 0)};
    for (int r = 1; r <= lambda.height(); ++r)
        for (int c = 1; c <= lambda.row(r); ++c)
            ++content.counts[residue_of({r, c}, p)];
    return content;
}

std::uint64_t specht_dimension(const Partition &lambda) {
    if (lambda.empty())
        throw Error(ErrorCode::EmptyPartition,
                    "specht_dimension needs a nonempty shape");

    // n! / prod(hooks), accumulated as prime exponents to stay exact.
    const int n = lambda.size();
    std::map<int, int> exponent;
    auto add_factorisation = [&](int value, int sign) {
        for (int d = 2; d * d <= value; ++d)
            while (value % d == 0) {
                exponent[d] += sign;
                value /= d;
            }
        if (value > 1)
            exponent[value] += sign;
    };
    for (int k = 2; k <= n; ++k)
        add_factorisation(k, +1);

    const Partition conj = conjugate(lambda);
    for (int r = 1; r <= lambda.height(); ++r)
        for (int c = 1; c <= lambda.row(r); ++c) {
            int hook = (lambda.row(r) - c) + (conj.row(c) - r) + 1;
            add_factorisation(hook, -1);
        }

    std::uint64_t result = 1;
    for (auto [prime, e] : exponent) {
        if (e < 0)
            throw Error(ErrorCode::InternalInconsistency,
                        "hook product does not divide n!");
        for (int k = 0; k < e; ++k) {
            if (result > UINT64_MAX / static_cast<std::uint64_t>(prime))
                throw Error(ErrorCode::InternalInconsistency,
                            "tableaux count overflows 64 bits");
            result *= static_cast<std::uint64_t>(prime);
        }
    }
    return result;
}

PartitionStream::PartitionStream(int n) : n_(n) {}

PartitionStream::PartitionStream(int n, Prime p, bool regular_only)
    : n_(n) {
    if (regular_only)
        filter_ = p;
}

// Steps current_ to its successor in descending lexicographic order.
bool PartitionStream::advance() {
    if (!started_) {
        started_ = true;
        if (n_ < 0)
            return false;
        if (n_ > 0)
            current_ = {n_};
        return true;
    }
    // Rightmost part greater than 1, then redistribute the tail greedily.
    int ones = 0;
    while (!current_.empty() && current_.back() == 1) {
        current_.pop_back();
        ++ones;
    }
    if (current_.empty())
        return false;
    int k = --current_.back();
    int remaining = ones + 1;
    while (remaining > 0) {
        int take = std::min(k, remaining);
        current_.push_back(take);
        remaining -= take;
    }
    return true;
}

std::optional<Partition> PartitionStream::next() {
    while (!done_) {
        if (!advance()) {
            done_ = true;
            break;
        }
        Partition lambda(current_);
        if (filter_ && !is_p_regular(lambda, *filter_))
            continue;
        return lambda;
    }
    return std::nullopt;
}

std::vector<Partition> enumerate_partitions(int n) {
    std::vector<Partition> out;
    PartitionStream stream(n);
    while (auto lambda = stream.next())
        out.push_back(std::move(*lambda));
    return out;
}

std::vector<Partition> enumerate_partitions(int n, Prime p,
                                            bool regular_only) {
    std::vector<Partition> out;
    PartitionStream stream(n, p, regular_only);
    while (auto lambda = stream.next())
        out.push_back(std::move(*lambda));
    return out;
}

} // namespace modrep
