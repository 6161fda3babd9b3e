// Copyright 2026 The metacat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string_view>

// Vocabulary constants used across the pipeline. The selection covers the
// DCAT-2 terms the record model maps, Dublin Core and FOAF for agents, vCard
// for contact points, W3C Basic Geo for centroids and DQV for measurements.
// It is a curated subset, not the full vocabularies.
namespace metacat::vocab {

inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kDcat = "http://www.w3.org/ns/dcat#";
inline constexpr std::string_view kDct = "http://purl.org/dc/terms/";
inline constexpr std::string_view kFoaf = "http://xmlns.com/foaf/0.1/";
inline constexpr std::string_view kVcard = "http://www.w3.org/2006/vcard/ns#";
inline constexpr std::string_view kSkos = "http://www.w3.org/2004/02/skos/core#";
inline constexpr std::string_view kDqv = "http://www.w3.org/ns/dqv#";
inline constexpr std::string_view kGeo = "http://www.w3.org/2003/01/geo/wgs84_pos#";
inline constexpr std::string_view kAdms = "http://www.w3.org/ns/adms#";
inline constexpr std::string_view kProv = "http://www.w3.org/ns/prov#";
inline constexpr std::string_view kLocn = "http://www.w3.org/ns/locn#";
inline constexpr std::string_view kSchema = "http://schema.org/";
inline constexpr std::string_view kSpdx = "http://spdx.org/rdf/terms#";
inline constexpr std::string_view kOntolex = "http://www.w3.org/ns/lemon/ontolex#";
inline constexpr std::string_view kLexinfo = "http://www.lexinfo.net/ontology/3.0/lexinfo#";
inline constexpr std::string_view kFrequency = "http://purl.org/cld/freq/";
inline constexpr std::string_view kEuFrequency = "http://publications.europa.eu/resource/authority/frequency/";
/// Namespace for terms this project defines itself (place levels, metrics).
inline constexpr std::string_view kMetacat = "urn:metacat:";

#define METACAT_TERM(name, ns, local) inline constexpr std::string_view name = ns local

// The macro concatenates string literals, so namespaces are repeated here.
METACAT_TERM(kRdfType, "http://www.w3.org/1999/02/22-rdf-syntax-ns#", "type");
METACAT_TERM(kRdfsLabel, "http://www.w3.org/2000/01/rdf-schema#", "label");
METACAT_TERM(kRdfsSeeAlso, "http://www.w3.org/2000/01/rdf-schema#", "seeAlso");
METACAT_TERM(kXsdString, "http://www.w3.org/2001/XMLSchema#", "string");
METACAT_TERM(kXsdInteger, "http://www.w3.org/2001/XMLSchema#", "integer");
METACAT_TERM(kXsdDecimal, "http://www.w3.org/2001/XMLSchema#", "decimal");
METACAT_TERM(kXsdDouble, "http://www.w3.org/2001/XMLSchema#", "double");
METACAT_TERM(kXsdBoolean, "http://www.w3.org/2001/XMLSchema#", "boolean");
METACAT_TERM(kXsdDate, "http://www.w3.org/2001/XMLSchema#", "date");
METACAT_TERM(kXsdDateTime, "http://www.w3.org/2001/XMLSchema#", "dateTime");
METACAT_TERM(kXsdNonNegativeInteger, "http://www.w3.org/2001/XMLSchema#", "nonNegativeInteger");
METACAT_TERM(kRdfLangString, "http://www.w3.org/1999/02/22-rdf-syntax-ns#", "langString");
METACAT_TERM(kOwlVersionInfo, "http://www.w3.org/2002/07/owl#", "versionInfo");

METACAT_TERM(kDcatCatalog, "http://www.w3.org/ns/dcat#", "Catalog");
METACAT_TERM(kDcatDataset, "http://www.w3.org/ns/dcat#", "Dataset");
METACAT_TERM(kDcatDistribution, "http://www.w3.org/ns/dcat#", "Distribution");
METACAT_TERM(kDcatDistributionProp, "http://www.w3.org/ns/dcat#", "distribution");
METACAT_TERM(kDcatKeyword, "http://www.w3.org/ns/dcat#", "keyword");
METACAT_TERM(kDcatTheme, "http://www.w3.org/ns/dcat#", "theme");
METACAT_TERM(kDcatLandingPage, "http://www.w3.org/ns/dcat#", "landingPage");
METACAT_TERM(kDcatContactPoint, "http://www.w3.org/ns/dcat#", "contactPoint");
METACAT_TERM(kDcatAccessUrl, "http://www.w3.org/ns/dcat#", "accessURL");
METACAT_TERM(kDcatDownloadUrl, "http://www.w3.org/ns/dcat#", "downloadURL");
METACAT_TERM(kDcatMediaType, "http://www.w3.org/ns/dcat#", "mediaType");
METACAT_TERM(kDcatByteSize, "http://www.w3.org/ns/dcat#", "byteSize");
METACAT_TERM(kDcatStartDate, "http://www.w3.org/ns/dcat#", "startDate");
METACAT_TERM(kDcatEndDate, "http://www.w3.org/ns/dcat#", "endDate");
METACAT_TERM(kDcatAccessService, "http://www.w3.org/ns/dcat#", "accessService");
METACAT_TERM(kDcatQualifiedRelation, "http://www.w3.org/ns/dcat#", "qualifiedRelation");
METACAT_TERM(kDcatDatasetProp, "http://www.w3.org/ns/dcat#", "dataset");

METACAT_TERM(kDctTitle, "http://purl.org/dc/terms/", "title");
METACAT_TERM(kDctDescription, "http://purl.org/dc/terms/", "description");
METACAT_TERM(kDctPublisher, "http://purl.org/dc/terms/", "publisher");
METACAT_TERM(kDctIssued, "http://purl.org/dc/terms/", "issued");
METACAT_TERM(kDctModified, "http://purl.org/dc/terms/", "modified");
METACAT_TERM(kDctAccrualPeriodicity, "http://purl.org/dc/terms/", "accrualPeriodicity");
METACAT_TERM(kDctSpatial, "http://purl.org/dc/terms/", "spatial");
METACAT_TERM(kDctTemporal, "http://purl.org/dc/terms/", "temporal");
METACAT_TERM(kDctIdentifier, "http://purl.org/dc/terms/", "identifier");
METACAT_TERM(kDctLanguage, "http://purl.org/dc/terms/", "language");
METACAT_TERM(kDctLicense, "http://purl.org/dc/terms/", "license");
METACAT_TERM(kDctRights, "http://purl.org/dc/terms/", "rights");
METACAT_TERM(kDctFormat, "http://purl.org/dc/terms/", "format");
METACAT_TERM(kDctIsPartOf, "http://purl.org/dc/terms/", "isPartOf");
METACAT_TERM(kDctConformsTo, "http://purl.org/dc/terms/", "conformsTo");
METACAT_TERM(kDctRelation, "http://purl.org/dc/terms/", "relation");
METACAT_TERM(kDctIsReferencedBy, "http://purl.org/dc/terms/", "isReferencedBy");
METACAT_TERM(kDctSource, "http://purl.org/dc/terms/", "source");
METACAT_TERM(kDctReferences, "http://purl.org/dc/terms/", "references");

METACAT_TERM(kFoafName, "http://xmlns.com/foaf/0.1/", "name");
METACAT_TERM(kFoafHomepage, "http://xmlns.com/foaf/0.1/", "homepage");
METACAT_TERM(kFoafMbox, "http://xmlns.com/foaf/0.1/", "mbox");
METACAT_TERM(kFoafPage, "http://xmlns.com/foaf/0.1/", "page");
METACAT_TERM(kFoafAgent, "http://xmlns.com/foaf/0.1/", "Agent");

METACAT_TERM(kVcardKind, "http://www.w3.org/2006/vcard/ns#", "Kind");
METACAT_TERM(kVcardFn, "http://www.w3.org/2006/vcard/ns#", "fn");
METACAT_TERM(kVcardHasEmail, "http://www.w3.org/2006/vcard/ns#", "hasEmail");
METACAT_TERM(kVcardHasUrl, "http://www.w3.org/2006/vcard/ns#", "hasURL");
METACAT_TERM(kVcardHasTelephone, "http://www.w3.org/2006/vcard/ns#", "hasTelephone");
METACAT_TERM(kVcardHasAddress, "http://www.w3.org/2006/vcard/ns#", "hasAddress");

METACAT_TERM(kSkosPrefLabel, "http://www.w3.org/2004/02/skos/core#", "prefLabel");
METACAT_TERM(kSkosExactMatch, "http://www.w3.org/2004/02/skos/core#", "exactMatch");

METACAT_TERM(kGeoLat, "http://www.w3.org/2003/01/geo/wgs84_pos#", "lat");
METACAT_TERM(kGeoLong, "http://www.w3.org/2003/01/geo/wgs84_pos#", "long");

METACAT_TERM(kDqvQualityMeasurement, "http://www.w3.org/ns/dqv#", "QualityMeasurement");
METACAT_TERM(kDqvIsMeasurementOf, "http://www.w3.org/ns/dqv#", "isMeasurementOf");
METACAT_TERM(kDqvComputedOn, "http://www.w3.org/ns/dqv#", "computedOn");
METACAT_TERM(kDqvValue, "http://www.w3.org/ns/dqv#", "value");
METACAT_TERM(kDqvHasQualityMeasurement, "http://www.w3.org/ns/dqv#", "hasQualityMeasurement");

METACAT_TERM(kSpdxChecksum, "http://spdx.org/rdf/terms#", "checksum");
METACAT_TERM(kSchemaSignature, "http://schema.org/", "signature");

METACAT_TERM(kOntolexWrittenRep, "http://www.w3.org/ns/lemon/ontolex#", "writtenRep");
METACAT_TERM(kOntolexCanonicalForm, "http://www.w3.org/ns/lemon/ontolex#", "canonicalForm");
METACAT_TERM(kLexinfoPartOfSpeech, "http://www.lexinfo.net/ontology/3.0/lexinfo#", "partOfSpeech");
METACAT_TERM(kLexinfoNoun, "http://www.lexinfo.net/ontology/3.0/lexinfo#", "noun");
METACAT_TERM(kLexinfoSynonym, "http://www.lexinfo.net/ontology/3.0/lexinfo#", "synonym");
METACAT_TERM(kDctLanguageLex, "http://purl.org/dc/terms/", "language");

METACAT_TERM(kPlaceLevel, "urn:metacat:", "placeLevel");
METACAT_TERM(kMetricBase, "urn:metacat:metric:", "");
METACAT_TERM(kMeasurementBase, "urn:metacat:measurement:", "");

#undef METACAT_TERM

}  // namespace metacat::vocab
