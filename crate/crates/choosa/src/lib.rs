//! Exact list coloring, interval-list ((gamma, mu)) choosability and the
//! constructive procedures behind the small-graph choosability results:
//! residue-class lifting of k-colorings, SDR/Hall machinery, K_{n,n}
//! size-2 interval colorings, and brute-force verification sweeps.

pub mod choosability;
pub mod constructive;
pub mod graph;
pub mod lists;
pub mod oracle;
pub mod report;
pub mod solve;
pub mod verify;
