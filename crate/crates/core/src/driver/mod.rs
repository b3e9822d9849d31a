//! Named check batteries, the element parser, configuration files and
//! JSON reports.

mod config;
mod parse;
mod report;
mod suites;

pub use config::{
    AlgebraSel, CustomTable, EntryDecl, FamilyDecl, ModuleSel, SuiteConfig, DEFAULT_LAMBDAS, MAX_M, MAX_WINDOW2,
};
pub use parse::parse_element;
pub use report::{CheckResult, Status, SuiteReport, Summary, SCHEMA_VERSION};
pub use suites::{aab_ll_oracle, execute, plan, run_suite, Check, ScanExpect, SUITE_NAMES};

#[cfg(test)]
mod tests;
