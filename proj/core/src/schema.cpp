#include "nbsql/schema.hpp"

#include "nbsql/strings.hpp"

#include <algorithm>

namespace nbsql {

ColumnType column_type_from_string(std::string_view s) {
    const std::string t = fold(s);
    if (t == "text") return ColumnType::Text;
    if (t == "number") return ColumnType::Number;
    if (t == "time") return ColumnType::Time;
    if (t == "boolean") return ColumnType::Boolean;
    return ColumnType::Other;
}

const char* to_string(ColumnType t) {
    switch (t) {
    case ColumnType::Text: return "text";
    case ColumnType::Number: return "number";
    case ColumnType::Time: return "time";
    case ColumnType::Boolean: return "boolean";
    case ColumnType::Other: return "others";
    }
    return "others";
}

std::string ColumnRef::key() const { return to_lower(table) + "." + to_lower(column); }

const ColumnDef* TableDef::find_column(std::string_view column_name) const {
    for (const ColumnDef& c : columns)
        if (iequals(c.name, column_name)) return &c;
    return nullptr;
}

DatabaseSchema::DatabaseSchema(std::string db_id, std::vector<TableDef> tables,
                               std::vector<ForeignKey> foreign_keys)
    : db_id_(std::move(db_id)), tables_(std::move(tables)),
      foreign_keys_(std::move(foreign_keys)) {
    for (std::size_t i = 0; i < tables_.size(); ++i)
        table_index_[to_lower(tables_[i].name)] = i;
    for (const ForeignKey& fk : foreign_keys_) {
        if (!has_column(fk.from))
            throw SchemaError("db '" + db_id_ + "': foreign key references unknown column " +
                              fk.from.str());
        if (!has_column(fk.to))
            throw SchemaError("db '" + db_id_ + "': foreign key targets unknown column " +
                              fk.to.str());
        // first declaration wins when a column carries several FK edges
        fk_target_.emplace(fk.from.key(), fk.to);
    }
}

const TableDef* DatabaseSchema::find_table(std::string_view name) const {
    auto it = table_index_.find(to_lower(name));
    return it == table_index_.end() ? nullptr : &tables_[it->second];
}

bool DatabaseSchema::has_column(const ColumnRef& ref) const {
    const TableDef* t = find_table(ref.table);
    return t != nullptr && t->find_column(ref.column) != nullptr;
}

ColumnType DatabaseSchema::column_type(const ColumnRef& ref) const {
    const TableDef* t = find_table(ref.table);
    if (!t) throw ResolutionError("unknown table '" + ref.table + "'", ref.table);
    const ColumnDef* c = t->find_column(ref.column);
    if (!c) throw ResolutionError("unknown column '" + ref.str() + "'", ref.str());
    return c->type;
}

namespace {

// splits "qualifier.column" (at most one dot)
std::pair<std::string, std::string> split_qualified(std::string_view identifier) {
    const auto dot = identifier.find('.');
    if (dot == std::string_view::npos) return {std::string(), std::string(identifier)};
    return {std::string(identifier.substr(0, dot)), std::string(identifier.substr(dot + 1))};
}

} // namespace

ColumnRef DatabaseSchema::resolve_column(std::string_view identifier,
                                         const std::set<std::string>& from_tables,
                                         const std::map<std::string, std::string>& aliases) const {
    auto [qualifier, column] = split_qualified(trim(identifier));
    if (column.empty())
        throw ResolutionError("empty column identifier", std::string(identifier));

    if (!qualifier.empty()) {
        std::string table_name = qualifier;
        auto alias_it = aliases.find(to_lower(qualifier));
        if (alias_it != aliases.end()) table_name = alias_it->second;
        const TableDef* t = find_table(table_name);
        if (!t)
            throw ResolutionError("unknown table '" + qualifier + "'", std::string(identifier));
        const ColumnDef* c = t->find_column(column);
        if (!c)
            throw ResolutionError("unknown column '" + std::string(identifier) + "'",
                                  std::string(identifier));
        return {t->name, c->name};
    }

    std::vector<ColumnRef> matches;
    auto consider = [&](const TableDef& t) {
        if (const ColumnDef* c = t.find_column(column)) matches.push_back({t.name, c->name});
    };
    if (from_tables.empty()) {
        for (const TableDef& t : tables_) consider(t);
    } else {
        // iterate schema order so the result is independent of set ordering
        for (const TableDef& t : tables_) {
            for (const auto& wanted : from_tables) {
                if (iequals(t.name, wanted)) {
                    consider(t);
                    break;
                }
            }
        }
    }
    if (matches.empty())
        throw ResolutionError("unknown column '" + std::string(identifier) + "'",
                              std::string(identifier));
    if (matches.size() > 1)
        throw AmbiguityError("ambiguous column '" + std::string(identifier) + "' (matches " +
                                 matches[0].str() + " and " + matches[1].str() + ")",
                             std::string(identifier));
    return matches.front();
}

std::optional<ColumnRef> DatabaseSchema::resolve_column_lenient(
    std::string_view identifier, const std::vector<std::string>& from_order,
    const std::map<std::string, std::string>& aliases) const {
    auto [qualifier, column] = split_qualified(trim(identifier));
    if (column.empty()) return std::nullopt;
    if (!qualifier.empty()) {
        std::string table_name = qualifier;
        auto alias_it = aliases.find(to_lower(qualifier));
        if (alias_it != aliases.end()) table_name = alias_it->second;
        const TableDef* t = find_table(table_name);
        if (!t) return std::nullopt;
        const ColumnDef* c = t->find_column(column);
        if (!c) return std::nullopt;
        return ColumnRef{t->name, c->name};
    }
    for (const std::string& table_name : from_order) {
        if (const TableDef* t = find_table(table_name)) {
            if (const ColumnDef* c = t->find_column(column)) return ColumnRef{t->name, c->name};
        }
    }
    if (from_order.empty()) {
        for (const TableDef& t : tables_)
            if (const ColumnDef* c = t.find_column(column)) return ColumnRef{t.name, c->name};
    }
    return std::nullopt;
}

ColumnRef DatabaseSchema::pk_of_fk(const ColumnRef& ref) const {
    ColumnRef current = ref;
    std::vector<std::string> chain{current.key()};
    while (true) {
        auto it = fk_target_.find(current.key());
        if (it == fk_target_.end()) return current;
        current = it->second;
        for (const std::string& seen : chain) {
            if (seen == current.key()) {
                chain.push_back(current.key());
                throw CycleError("foreign-key cycle: " + join(chain, " -> "));
            }
        }
        chain.push_back(current.key());
    }
}

bool DatabaseSchema::is_foreign_key(const ColumnRef& ref) const {
    return fk_target_.count(ref.key()) > 0;
}

SchemaCatalog::SchemaCatalog(std::vector<DatabaseSchema> schemas) {
    for (DatabaseSchema& s : schemas) {
        std::string id = s.db_id();
        schemas_.emplace(std::move(id), std::move(s));
    }
}

const DatabaseSchema& SchemaCatalog::at(const std::string& db_id) const {
    auto it = schemas_.find(db_id);
    if (it == schemas_.end()) throw SchemaError("unknown db_id '" + db_id + "'");
    return it->second;
}

const DatabaseSchema* SchemaCatalog::find(const std::string& db_id) const {
    auto it = schemas_.find(db_id);
    return it == schemas_.end() ? nullptr : &it->second;
}

} // namespace nbsql
