pub mod eigen;
pub mod error;
pub mod group;
pub mod ideal;
pub mod kummer;
pub mod model;
pub mod probe;
pub mod report;
pub mod resolution;
pub mod smoothness;
pub mod stability;
pub mod toric;

pub use error::GeometryError;
