#pragma once

#include "nbsql/errors.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace nbsql {

enum class ColumnType { Text, Number, Time, Boolean, Other };

ColumnType column_type_from_string(std::string_view s);
const char* to_string(ColumnType t);

/// Fully-qualified column reference. Stored in original case; all comparisons
/// are case-insensitive.
struct ColumnRef {
    std::string table;
    std::string column;

    std::string str() const { return table + "." + column; }
    std::string key() const; // lower-cased "table.column"

    friend bool operator==(const ColumnRef& a, const ColumnRef& b) {
        return a.key() == b.key();
    }
    friend bool operator<(const ColumnRef& a, const ColumnRef& b) { return a.key() < b.key(); }
};

struct ColumnDef {
    std::string name;         // original name, e.g. "Song_release_year"
    std::string natural_name; // human-readable form, e.g. "song release year"
    ColumnType type = ColumnType::Other;
};

struct TableDef {
    std::string name;
    std::string natural_name;
    std::vector<ColumnDef> columns;
    std::vector<std::string> primary_keys;

    const ColumnDef* find_column(std::string_view column_name) const;
};

struct ForeignKey {
    ColumnRef from; // referencing column
    ColumnRef to;   // referenced column
};

/// One database's tables, columns, and key relations.
class DatabaseSchema {
public:
    DatabaseSchema() = default;
    DatabaseSchema(std::string db_id, std::vector<TableDef> tables,
                   std::vector<ForeignKey> foreign_keys);

    const std::string& db_id() const { return db_id_; }
    const std::vector<TableDef>& tables() const { return tables_; }
    const std::vector<ForeignKey>& foreign_keys() const { return foreign_keys_; }

    const TableDef* find_table(std::string_view name) const;
    bool has_column(const ColumnRef& ref) const;
    ColumnType column_type(const ColumnRef& ref) const;

    /// Resolves an identifier ("name", "singer.name", or "T1.name" through
    /// `aliases`) to a unique column among `from_tables`. An empty table set
    /// searches the whole database. Throws ResolutionError when nothing
    /// matches and AmbiguityError when an unqualified name matches several
    /// tables.
    ColumnRef resolve_column(std::string_view identifier,
                             const std::set<std::string>& from_tables = {},
                             const std::map<std::string, std::string>& aliases = {}) const;

    /// Like resolve_column, but an ambiguous unqualified name resolves to the
    /// first matching table in `from_order`, mirroring how the reference
    /// Spider evaluator binds columns.
    std::optional<ColumnRef> resolve_column_lenient(
        std::string_view identifier, const std::vector<std::string>& from_order,
        const std::map<std::string, std::string>& aliases = {}) const;

    /// Follows the foreign-key relation to its fixed point: an FK column maps
    /// to the primary key it (transitively) references, anything else maps to
    /// itself. Throws CycleError when the chain loops.
    ColumnRef pk_of_fk(const ColumnRef& ref) const;

    bool is_foreign_key(const ColumnRef& ref) const;

private:
    std::string db_id_;
    std::vector<TableDef> tables_;
    std::vector<ForeignKey> foreign_keys_;
    std::map<std::string, std::size_t> table_index_;   // lower name -> index
    std::map<std::string, ColumnRef> fk_target_;       // lower "t.c" -> referenced column
};

/// All databases of a corpus, keyed by db_id.
class SchemaCatalog {
public:
    SchemaCatalog() = default;
    explicit SchemaCatalog(std::vector<DatabaseSchema> schemas);

    const DatabaseSchema& at(const std::string& db_id) const;
    const DatabaseSchema* find(const std::string& db_id) const;
    std::size_t size() const { return schemas_.size(); }

    auto begin() const { return schemas_.begin(); }
    auto end() const { return schemas_.end(); }

private:
    std::map<std::string, DatabaseSchema> schemas_;
};

} // namespace nbsql
