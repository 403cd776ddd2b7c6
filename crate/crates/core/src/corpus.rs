//! Built-in reference groupoids: the fourteen smallest distinguishing
//! examples for the nontrivial length-6 varieties, the order-9 and order-8
//! factors whose product separates the AC-nice identity at length 8, and the
//! order-3 witness for the power criterion.

use crate::identities::{parse_identity, LinearIdentity};
use crate::models::GroupoidTable;

/// The fourteen distinguishing tables, keyed by the canonical name of the
/// identity each satisfies exclusively among the fourteen.
pub const DISTINGUISHING_TABLES: [(&str, &str); 14] = [
    (
        "<3|1|1|(1,2)>",
        "3
         0 1 0
         0 1 2
         1 1 1",
    ),
    (
        "<3|0|0|(1,2)>",
        "4
         0 0 3 2
         0 0 3 0
         0 0 3 2
         0 0 3 2",
    ),
    (
        "<3|0|0|(2,3)>",
        "4
         0 3 3 3
         1 1 1 1
         2 0 0 0
         3 2 2 2",
    ),
    (
        "<3|0|1|()>",
        "4
         0 0 2 2
         1 1 3 3
         0 0 2 2
         1 1 3 3",
    ),
    (
        "<3|0|1|(1,2)>",
        "4
         0 1 2 2
         0 1 3 3
         0 1 2 2
         0 1 2 2",
    ),
    (
        "<3|0|1|(2,3)>",
        "4
         0 0 3 0
         1 1 1 1
         2 2 2 2
         0 0 3 0",
    ),
    (
        "<3|1|1|(2,3)>",
        "4
         0 0 3 0
         1 1 0 1
         1 1 0 1
         0 0 0 0",
    ),
    (
        "<3|0|0|(1,3)>",
        "5
         0 3 4 1 2
         2 1 0 4 3
         3 4 2 0 1
         4 2 1 3 0
         1 0 3 2 4",
    ),
    (
        "<3|1|1|(1,3)>",
        "5
         0 3 0 1 1
         1 0 1 3 3
         0 3 0 1 1
         3 1 4 0 0
         3 1 3 0 0",
    ),
    (
        "<3|0|1|(1,3)>",
        "6
         3 0 1 3 3 4
         4 3 1 3 0 3
         5 5 3 3 1 1
         3 3 3 3 3 3
         3 4 5 3 3 0
         0 3 5 3 4 3",
    ),
    (
        "<3|0|1|(1,2,3)>",
        "6
         3 3 3 3 4 3
         4 3 3 4 3 3
         3 4 3 5 4 3
         3 4 5 3 3 3
         4 3 4 3 3 3
         3 3 3 3 3 3",
    ),
    (
        "<3|0|0|(1,2,3)>",
        "9
         2 3 4 4 4 4 8 4 4
         2 3 6 6 4 4 4 4 4
         5 5 4 4 4 4 4 4 4
         5 5 7 7 4 4 4 4 4
         4 4 4 4 4 4 4 4 4
         4 7 4 4 4 4 4 4 4
         7 7 4 4 4 4 4 4 4
         4 4 4 4 4 4 4 4 4
         4 4 4 4 4 4 4 4 4",
    ),
    (
        "<3|0|1|(1,3,2)>",
        "9
         3 3 3 4 4 7 8 4 4
         4 4 6 4 4 7 4 4 4
         5 3 5 4 4 7 8 4 4
         4 4 7 4 4 4 4 4 4
         4 4 4 4 4 4 4 4 4
         4 8 7 4 4 4 4 4 4
         4 4 4 4 4 4 4 4 4
         4 4 4 4 4 4 4 4 4
         4 4 4 4 4 4 4 4 4",
    ),
    (
        "<3|1|1|(1,2,3)>",
        "9
         1 3 1 4 4 3 4 4 7
         4 4 8 4 4 7 4 4 4
         5 3 5 7 4 3 4 4 7
         4 4 6 4 4 4 4 4 4
         4 4 4 4 4 4 4 4 4
         4 4 8 4 4 7 4 4 4
         4 4 4 4 4 4 4 4 4
         4 4 4 4 4 4 4 4 4
         4 4 4 4 4 4 4 4 4",
    ),
];

const TABLE_A: &str = "9
    2 3 5 7 5 6 8 8 8
    4 3 6 6 6 6 8 8 8
    5 5 6 8 8 8 8 8 8
    6 6 6 8 8 8 8 8 8
    7 7 6 8 8 8 8 8 8
    6 8 8 8 8 8 8 8 8
    8 8 8 8 8 8 8 8 8
    6 8 8 8 8 8 8 8 8
    8 8 8 8 8 8 8 8 8";

const TABLE_B: &str = "8
    2 3 2 7 2 6 2 2
    4 2 2 2 5 2 2 6
    2 2 2 2 2 2 2 2
    2 5 2 2 6 2 2 2
    7 2 2 6 2 2 2 2
    6 2 2 2 2 2 2 2
    2 2 2 2 2 2 2 2
    2 6 2 2 2 2 2 2";

const POWER_WITNESS: &str = "3
    0 1 2
    2 0 1
    1 2 0";

/// The distinguishing corpus as parsed identities and tables, in shipped
/// order.
pub fn distinguishing_corpus() -> Vec<(LinearIdentity, GroupoidTable)> {
    DISTINGUISHING_TABLES
        .iter()
        .map(|(name, text)| {
            (
                parse_identity(name).expect("corpus name parses"),
                GroupoidTable::parse(text).expect("corpus table parses"),
            )
        })
        .collect()
}

/// The order-9 factor of the length-8 separating product.
pub fn table_a() -> GroupoidTable {
    GroupoidTable::parse(TABLE_A).expect("table A parses")
}

/// The order-8 factor of the length-8 separating product.
pub fn table_b() -> GroupoidTable {
    GroupoidTable::parse(TABLE_B).expect("table B parses")
}

/// An order-3 groupoid satisfying `<4|3|3|(1,3)(2,4)>` but not
/// `<4|3|3|(1,2,3,4)>`: the power criterion is strict.
pub fn power_witness() -> GroupoidTable {
    GroupoidTable::parse(POWER_WITNESS).expect("witness table parses")
}
