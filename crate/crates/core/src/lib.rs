pub mod catalog;
pub mod cohomology;
pub mod fp;
pub mod group;
pub mod isoclinism;
pub mod wedge;
