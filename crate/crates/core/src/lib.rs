pub mod bundles;
pub mod engine;
pub mod exact;
pub mod geom;
pub mod golden;
pub mod report;
pub mod scenario;
pub mod toric;
