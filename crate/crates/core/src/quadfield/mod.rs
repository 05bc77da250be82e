//! Real quadratic fields through indefinite binary quadratic forms.

mod classgroup;
mod disc;
mod form;
mod int;
mod scan;
mod tables;

pub use classgroup::{class_group, reduced_forms, ClassGroupInfo, FormClassGroup};
pub use disc::is_fundamental;
pub use form::QuadForm;
pub use int::FormInt;
pub use scan::{scan, scan_chunked, ScanEntry, DEFAULT_CHUNK};
pub use tables::{
    load_table, rows_checksum, tally, verify_table, verify_tables, GroupRef, RowCheck, TableFile,
    TableReport, TableRow, TablesReport, Tally, SHARE_TOLERANCE, STATED_SHARES, TABLE_NAMES,
};
