//! Library surface of the command line tool: the glob matcher used for
//! check filtering and the verification suite itself.

pub mod glob;
pub mod suite;
