// Copyright 2026 The choquard developers
//
// Licensed under the Apache license, version 2.0 (the "license");
// you may not use this file except in compliance with the license.
// You may obtain a copy of the license at
//
//     http://www.apache.org/licenses/license-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the license is distributed on an "as is" basis,
// without warranties or conditions of any kind, either express or implied.
// See the license for the specific language governing permissions and
// limitations under the license.

//! Persistence: the `CHQF` binary field format, run configurations and manifests.

mod chqf;
mod config;

pub use chqf::{decode_field, encode_field, read_field, write_field, FORMAT_VERSION, MAGIC};
pub use config::{
    config_hash, write_csv, write_json, OutputSection, ParamsSection, RunConfig, RunManifest,
};
