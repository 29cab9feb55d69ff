WELL_KNOWN_PREFIXES = {
    "foaf": "http://xmlns.com/foaf/0.1/",
    "vcard": "http://www.w3.org/2001/vcard-rdf/3.0#",
    "ex": "http://example.org/",
    "rel": "http://purl.org/vocab/relationship/",
    "xsd": "http://www.w3.org/2001/XMLSchema#",
}
