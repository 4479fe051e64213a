"""Fixture texts: the musician mapping, its data and the pair query."""
MUSICIAN_MAPPING = '''\
# Prefixes
PREFIX rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#>
PREFIX rdfs: <http://www.w3.org/2000/01/rdf-schema#>
PREFIX prop: <http://dbpedia.org/property/>
PREFIX schema: <http://schema.org/>
PREFIX dbpedia-owl: <http://dbpedia.org/ontology/>
PREFIX foaf: <http://xmlns.com/foaf/0.1/>

# Node mapping
(mus:Musician {vis_label:nam, born:dat, hometown:twn})                    # PG Pattern
    ?mus rdf:type foaf:Person, dbpedia-owl:MusicalArtist .                # RDF Pattern
    ?mus rdfs:label ?nam .
    OPTIONAL { ?mus prop:born ?dat }
    OPTIONAL { ?mus dbpedia-owl:hometown / rdfs:label ?twn }

# Edge mapping
(mus1:Musician)-[:same_group {label:nam, length:len}]->(mus2:Musician)    # PG Pattern
    ?grp a schema:MusicGroup ;                                            # RDF Pattern
         dbpedia-owl:bandMember ?mus1 , ?mus2 .
    FILTER(?mus1 != ?mus2)
    OPTIONAL { ?grp rdfs:label ?nam. FILTER(lang(?nam) = "ja")}
    OPTIONAL { ?grp dbpedia-owl:wikiPageLength ?len }
'''

MINIMAL_MAPPING = 'PREFIX ex: <http://ex.org/>\n(x:Thing)\n ?x a ex:T .'

RDF = 'http://www.w3.org/1999/02/22-rdf-syntax-ns#'
RDFS = 'http://www.w3.org/2000/01/rdf-schema#'
XSD = 'http://www.w3.org/2001/XMLSchema#'
FOAF = 'http://xmlns.com/foaf/0.1/'
DBO = 'http://dbpedia.org/ontology/'
DBP = 'http://dbpedia.org/property/'
DBR = 'http://dbpedia.org/resource/'
SCHEMA = 'http://schema.org/'

KUWATA = DBR + 'Keisuke_Kuwata'
HARA = DBR + 'Yuko_Hara'
SAS = DBR + 'Southern_All_Stars'
CHIGASAKI = DBR + 'Chigasaki'

HARA_ARTIST_TYPE = f'<{HARA}> <{RDF}type> <{DBO}MusicalArtist> .'

MUSICIANS_NT = f'''\
<{KUWATA}> <{RDF}type> <{FOAF}Person> .
<{KUWATA}> <{RDF}type> <{DBO}MusicalArtist> .
<{KUWATA}> <{RDFS}label> "桑田佳祐"@ja .
<{KUWATA}> <{DBP}born> "1956-02-26"^^<{XSD}date> .
<{KUWATA}> <{DBO}hometown> <{CHIGASAKI}> .
<{CHIGASAKI}> <{RDFS}label> "茅ヶ崎市"@ja .
<{HARA}> <{RDF}type> <{FOAF}Person> .
{HARA_ARTIST_TYPE}
<{HARA}> <{RDFS}label> "原由子"@ja .
<{SAS}> <{RDF}type> <{SCHEMA}MusicGroup> .
<{SAS}> <{DBO}bandMember> <{KUWATA}> .
<{SAS}> <{DBO}bandMember> <{HARA}> .
<{SAS}> <{RDFS}label> "サザンオールスターズ"@ja .
<{SAS}> <{RDFS}label> "Southern All Stars"@en .
<{SAS}> <{DBO}wikiPageLength> "52516"^^<{XSD}integer> .
'''

MUSICIANS_TTL = f'''\
@prefix rdf: <{RDF}> .
@prefix rdfs: <{RDFS}> .
@prefix xsd: <{XSD}> .
@prefix foaf: <{FOAF}> .
@prefix dbpedia-owl: <{DBO}> .
@prefix prop: <{DBP}> .
@prefix dbr: <{DBR}> .
PREFIX schema: <{SCHEMA}>

dbr:Keisuke_Kuwata a foaf:Person , dbpedia-owl:MusicalArtist ;
    rdfs:label "桑田佳祐"@ja ;
    prop:born "1956-02-26"^^xsd:date ;
    dbpedia-owl:hometown dbr:Chigasaki .
dbr:Chigasaki rdfs:label "茅ヶ崎市"@ja .

dbr:Yuko_Hara a foaf:Person, dbpedia-owl:MusicalArtist ;
    rdfs:label "原由子"@ja .

# the group both of them play in
dbr:Southern_All_Stars a schema:MusicGroup ;
    dbpedia-owl:bandMember dbr:Keisuke_Kuwata , dbr:Yuko_Hara ;
    rdfs:label "サザンオールスターズ"@ja, "Southern All Stars"@en ;
    dbpedia-owl:wikiPageLength 52516 .
'''

# Pair query over the same data; the second label is read from ?mus2.
PAIR_QUERY_PREFIXES = {
    'rdf': RDF,
    'rdfs': RDFS,
    'schema': SCHEMA,
    'dbpedia-owl': DBO,
    'foaf': FOAF,
}
PAIR_QUERY_VARS = ('nam1', 'nam2')
PAIR_QUERY_PATTERN = '''\
    ?mus1 rdf:type foaf:Person , dbpedia-owl:MusicalArtist .
    ?mus2 rdf:type foaf:Person , dbpedia-owl:MusicalArtist .
    ?mus1 rdfs:label ?nam1 . FILTER(lang(?nam1) = "ja") .
    ?mus2 rdfs:label ?nam2 . FILTER(lang(?nam2) = "ja") .
    ?grp a schema:MusicGroup ;
         dbpedia-owl:bandMember ?mus1 , ?mus2 .
    FILTER(?mus1 != ?mus2)
'''
