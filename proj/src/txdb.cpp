#include "sparemine/txdb.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "sparemine/errors.hpp"

namespace sparemine {

namespace {

// Returns kNoRank if `text` is valid UTF-8, otherwise the offset of the first
// offending byte.
std::size_t find_utf8_error(std::string_view text) {
    std::size_t i = 0;
    const auto n = text.size();
    while (i < n) {
        const unsigned char b = static_cast<unsigned char>(text[i]);
        std::size_t len;
        unsigned min_cp;
        if (b < 0x80) { ++i; continue; }
        else if ((b & 0xE0) == 0xC0) { len = 2; min_cp = 0x80; }
        else if ((b & 0xF0) == 0xE0) { len = 3; min_cp = 0x800; }
        else if ((b & 0xF8) == 0xF0) { len = 4; min_cp = 0x10000; }
        else return i;
        if (i + len > n) return i;
        unsigned cp = b & (0xFF >> (len + 1));
        for (std::size_t k = 1; k < len; ++k) {
            const unsigned char c = static_cast<unsigned char>(text[i + k]);
            if ((c & 0xC0) != 0x80) return i;
            cp = (cp << 6) | (c & 0x3F);
        }
        if (cp < min_cp || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return i;
        i += len;
    }
    return kNoRank;
}

bool is_separator(char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

std::string_view trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

void normalize(Transaction& t) {
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
}

std::string read_all(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

template <typename TokenFn>
TransactionDB parse_lines(std::string_view text, TokenFn&& tokenize_line) {
    if (const std::size_t bad = find_utf8_error(text); bad != kNoRank)
        throw DecodeError(bad);

    TransactionDB db;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = (nl == std::string_view::npos)
                                    ? text.substr(pos)
                                    : text.substr(pos, nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;

        const std::string_view stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;

        Transaction t = tokenize_line(db, line);
        if (t.empty()) continue;
        normalize(t);
        db.transactions.push_back(std::move(t));
    }
    return db;
}

} // namespace

ItemId TransactionDB::intern(std::string_view name) {
    if (auto it = item_ids.find(std::string(name)); it != item_ids.end())
        return it->second;
    const ItemId id = static_cast<ItemId>(item_names.size());
    item_names.emplace_back(name);
    item_ids.emplace(item_names.back(), id);
    return id;
}

TransactionDB load_basket(std::string_view text) {
    return parse_lines(text, [](TransactionDB& db, std::string_view line) {
        Transaction t;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && is_separator(line[i])) ++i;
            std::size_t j = i;
            while (j < line.size() && !is_separator(line[j])) ++j;
            if (j > i) t.push_back(db.intern(line.substr(i, j - i)));
            i = j;
        }
        return t;
    });
}

TransactionDB load_basket(std::istream& in) {
    return load_basket(std::string_view(read_all(in)));
}

TransactionDB load_csv(std::istream& in, bool first_column_is_id) {
    const std::string text = read_all(in);
    return parse_lines(std::string_view(text),
                       [first_column_is_id](TransactionDB& db, std::string_view line) {
        Transaction t;
        bool first = true;
        std::size_t pos = 0;
        while (pos <= line.size()) {
            const std::size_t comma = line.find(',', pos);
            std::string_view field = (comma == std::string_view::npos)
                                         ? line.substr(pos)
                                         : line.substr(pos, comma - pos);
            pos = (comma == std::string_view::npos) ? line.size() + 1 : comma + 1;
            field = trim(field);
            if (first && first_column_is_id) {
                first = false;
                continue;
            }
            first = false;
            if (!field.empty()) t.push_back(db.intern(field));
        }
        return t;
    });
}

void write_basket(const TransactionDB& db, std::ostream& out) {
    for (const Transaction& t : db.transactions) {
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) out << ',';
            out << db.name_of(t[i]);
        }
        out << '\n';
    }
}

std::string to_basket(const TransactionDB& db) {
    std::ostringstream out;
    write_basket(db, out);
    return out.str();
}

SupportThreshold SupportThreshold::absolute(std::size_t count) {
    SupportThreshold t;
    t.is_fraction_ = false;
    t.absolute_ = count;
    return t;
}

SupportThreshold SupportThreshold::fraction_ratio(std::uint64_t num, std::uint64_t den) {
    if (den == 0 || num == 0 || num > den)
        throw std::invalid_argument("support fraction must lie in (0, 1]");
    SupportThreshold t;
    t.is_fraction_ = true;
    t.num_ = num;
    t.den_ = den;
    return t;
}

SupportThreshold SupportThreshold::fraction(double f) {
    if (!(f > 0.0) || f > 1.0)
        throw std::invalid_argument("support fraction must lie in (0, 1]");
    constexpr std::uint64_t kScale = 1000000000ULL;
    const auto num = static_cast<std::uint64_t>(std::llround(f * static_cast<double>(kScale)));
    return fraction_ratio(std::max<std::uint64_t>(num, 1), kScale);
}

SupportThreshold SupportThreshold::parse(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) throw std::invalid_argument("empty support threshold");
    const bool percent = s.back() == '%';
    const std::string_view digits = percent ? s.substr(0, s.size() - 1) : s;
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
        throw std::invalid_argument("malformed support threshold: " + std::string(text));
    if (percent) return fraction_ratio(value, 100);   // rejects 0% and >100%
    return absolute(static_cast<std::size_t>(value));
}

std::size_t SupportThreshold::resolve(std::size_t n_transactions) const {
    std::size_t resolved;
    if (is_fraction_) {
        // ceil(num * n / den) in exact integer arithmetic
        const auto prod = static_cast<std::uint64_t>(n_transactions) * num_;
        resolved = static_cast<std::size_t>((prod + den_ - 1) / den_);
    } else {
        resolved = absolute_;
    }
    return std::max<std::size_t>(resolved, 1);
}

std::vector<std::size_t> item_supports(const TransactionDB& db) {
    std::vector<std::size_t> counts(db.n_items(), 0);
    for (const Transaction& t : db.transactions)
        for (const ItemId id : t)
            ++counts[id];
    return counts;
}

RankTable prune_and_rank(const TransactionDB& db, const SupportThreshold& minsup) {
    const std::vector<std::size_t> counts = item_supports(db);
    const std::size_t resolved = minsup.resolve(db.n_transactions());

    RankTable table;
    table.rank_by_item.assign(db.n_items(), kNoRank);
    table.support_by_item.assign(db.n_items(), 0);
    for (ItemId id = 0; id < db.n_items(); ++id)
        if (counts[id] >= resolved) table.order.push_back(id);

    // descending support, ties by ascending item name
    std::sort(table.order.begin(), table.order.end(), [&](ItemId a, ItemId b) {
        if (counts[a] != counts[b]) return counts[a] > counts[b];
        return db.name_of(a) < db.name_of(b);
    });

    for (std::size_t rank = 0; rank < table.order.size(); ++rank) {
        const ItemId id = table.order[rank];
        table.rank_by_item[id] = rank;
        table.support_by_item[id] = counts[id];
    }
    return table;
}

std::vector<ItemId> sort_transaction(const Transaction& t, const RankTable& ranks) {
    std::vector<ItemId> out;
    out.reserve(t.size());
    for (const ItemId id : t)
        if (ranks.survives(id)) out.push_back(id);
    std::sort(out.begin(), out.end(), [&](ItemId a, ItemId b) {
        return ranks.rank_of(a) < ranks.rank_of(b);
    });
    return out;
}

} // namespace sparemine
