#![allow(dead_code)]

pub mod rewriting;
pub mod smith;
