#!/usr/bin/env python3
"""Rebuild data/corpus.json from the work definitions in this file.

Expert entries carry hand-written relation explanations; generated
entries share templated relation prose, as model output tends to.
"""

from __future__ import annotations

import sys
from pathlib import Path

from semiosquare.corpus import (
    Medium,
    Provenance,
    ProvenanceKind,
    WorkAnalysis,
    WorkMeta,
    dump_corpus,
    load_corpus,
)
from semiosquare.square import (
    ROLE_ORDER,
    Relation,
    SemioticSquare,
    Term,
    canonical_relation_set,
    validate_square,
)

ROOT = Path(__file__).resolve().parent.parent

X, AX, NX, NAX = (role.value for role in ROLE_ORDER)

EXPERT_WORKS = [
    {
        "title": "The Old Man and the Sea",
        "author": "Ernest Hemingway",
        "medium": "novel",
        "culture": "American",
        "era": "20th century",
        "source": "published structuralist reading of Hemingway's late fiction",
        "terms": {
            X: (
                "undefeated dignity in struggle",
                "Santiago's eighty-four fishless days and his three-day fight with the marlin stake the novella on a dignity that defeat cannot touch: a man can be destroyed but not defeated.",
                ["Santiago", "the marlin fight"],
            ),
            AX: (
                "indifferent natural force",
                "The sea gives and takes without malice or mercy; the sharks that strip the marlin are not villains but the world's plain appetite, set against any human claim to mastery.",
                ["the sea", "the sharks"],
            ),
            NX: (
                "weariness and resignation",
                "Age, cramped hands, and the pity of the younger fishermen press Santiago toward giving in; resignation negates his defiance without itself being the sea's doing.",
                ["the cramped left hand", "the younger fishermen's pity"],
            ),
            NAX: (
                "human solidarity and care",
                "Manolin's devotion, the coffee and the blanket, the talk of baseball: small human kindnesses negate the sea's indifference and keep the old man's struggle possible.",
                ["Manolin", "the village"],
            ),
        },
        "relations": [
            "The novella's core opposition sets Santiago's undefeated dignity against the sea's indifferent force: the fight with the marlin is the place where the two meet and measure each other.",
            "Resignation denies dignity from within; every cramp, doubt, and memory of luck gone bad threatens to end the struggle not by force but by surrender.",
            "Care negates indifference: where the sea treats Santiago as nothing in particular, Manolin treats him as irreplaceable.",
            "Solidarity feeds the struggle; it is the boy's faith and the village's small supports that send Santiago out too far and bring him home still himself.",
            "Weariness works on nature's side, eroding the fisherman's resistance until the sharks' victory is almost conceded before it is taken.",
            "Resignation and care form the quiet second axis of the book: both are human-scaled answers to the sea, one letting go and one holding on.",
        ],
        "summary": "Dignity in struggle stands against the sea's indifference, while resignation undermines the struggle from within and human care sustains it from without; the marlin's stripped skeleton holds all four terms in one image.",
    },
    {
        "title": "White Deer Plain",
        "author": "Chen Zhongshi",
        "medium": "novel",
        "culture": "Chinese",
        "era": "20th century",
        "source": "published structuralist reading of contemporary Chinese realism",
        "terms": {
            X: (
                "Confucian clan order",
                "Bai Jiaxuan's rebuilt ancestral hall, the village compact, and the rites of the plain embody a moral order in which land, lineage, and virtue carry one another.",
                ["Bai Jiaxuan", "the ancestral hall", "the village compact"],
            ),
            AX: (
                "revolutionary upheaval",
                "Warlords, party struggle, and the young who leave for the revolution tear the plain's old order apart; history arrives as a storm the rites cannot contain.",
                ["Bai Ling", "Lu Zhaopeng", "the peasant movement"],
            ),
            NX: (
                "transgressive desire",
                "Tian Xiao'e's body and fate cut across the clan's morality without proposing any new order; desire negates the rites while belonging to no revolution.",
                ["Tian Xiao'e", "Heiwa's rebellion"],
            ),
            NAX: (
                "cultivated moral steadiness",
                "Mr. Zhu studies, mediates, and farms through every regime; his steadiness negates upheaval not by fighting it but by outlasting it, and in outlasting it he shores up the old order's best claims.",
                ["Mr. Zhu", "the academy"],
            ),
        },
        "relations": [
            "Clan order and revolution are the plain's two masters; every family on it is eventually forced to choose between the ancestral hall and the new banners.",
            "Desire is the rites' intimate negation: Tian Xiao'e breaks no army against the clan, yet her story exposes the cruelty folded into its virtue.",
            "Mr. Zhu's steadiness contradicts upheaval point for point, meeting slogans with the long patience of study and the harvest.",
            "Steadiness serves the old order; it is Mr. Zhu's example that lets Bai Jiaxuan's world claim a moral core beneath its severity.",
            "Transgression leans toward revolution: the same hunger that drives Xiao'e and Heiwa against the rites supplies the revolt with its foot soldiers.",
            "Desire and steadiness contend below the main battle, two ways of living beside the rites without commanding them.",
        ],
        "summary": "The plain is stretched between clan order and revolutionary upheaval; transgressive desire hollows the old order from inside while cultivated steadiness quietly sustains it, and the four positions together carry the novel's half-century of history.",
    },
    {
        "title": "The Night Before Christmas",
        "author": "Nikolai Gogol",
        "medium": "novel",
        "culture": "Ukrainian",
        "era": "19th century",
        "source": "published structuralist reading of Gogol's Dikanka cycle",
        "terms": {
            X: (
                "pious devotion and honest love",
                "Vakula paints icons, bears the Devil's tricks, and flies to Petersburg for a pair of slippers; his love and his faith are one workmanlike virtue.",
                ["Vakula", "the icon painting"],
            ),
            AX: (
                "devilish mischief",
                "The Devil steals the moon, raises the blizzard, and schemes against the smith; mischief is the night's counter-principle, theft of light for the joy of confusion.",
                ["the Devil", "the stolen moon"],
            ),
            NX: (
                "vain caprice",
                "Oksana's mirror-gazing and her mocking demand for the Tsaritsa's slippers negate devotion without being devilry; vanity is love's human, laughing contradiction.",
                ["Oksana", "the slippers demand"],
            ),
            NAX: (
                "communal festivity and folk faith",
                "Carols, koliadky sacks, and the village's crowded stoves negate the Devil's isolation and darkness; festivity is the ground on which Vakula's devotion can win.",
                ["the carolers", "the Christmas Eve feast"],
            ),
        },
        "relations": [
            "Devotion and devilry fight over one winter night: the smith who paints the Devil's defeat on the church wall must carry the Devil on his own back.",
            "Caprice negates devotion with a smile; Oksana's vanity nearly costs her the love that her own heart has already chosen.",
            "Festivity contradicts mischief: the carols relight what the stolen moon darkens, and the village's laughter is larger than the Devil's.",
            "Folk faith carries the lover: it is the believing, celebrating village that makes Vakula's pious stubbornness look like heroism rather than folly.",
            "Vanity opens the door to mischief; the Devil's best opportunities all pass through Oksana's teasing and the villagers' small hypocrisies.",
            "Caprice and festivity share the night's human middle ground, the one turning love into a game, the other turning it into a feast.",
        ],
        "summary": "Honest devotion contends with devilish mischief for the night, while vain caprice tests love from within and communal festivity carries it to victory; the square closes when the slippers arrive and the Devil is ridden home.",
    },
    {
        "title": "The Truman Show",
        "author": "Peter Weir",
        "medium": "film",
        "culture": "American",
        "era": "20th century",
        "source": "published structuralist reading of media-age cinema",
        "terms": {
            X: (
                "authentic self-determination",
                "Truman's wish to explore, his assembled photograph of Sylvia, and the sailboat pointed at the horizon all press toward a life chosen rather than produced.",
                ["Truman Burbank", "the voyage of the Santa Maria"],
            ),
            AX: (
                "manufactured reality",
                "Seahaven is a stage set with weather cues and product placements; Christof's dome manufactures a world so complete that its captive calls it home.",
                ["Christof", "the Seahaven dome"],
            ),
            NX: (
                "comfortable routine",
                "The rehearsed greetings, the unexamined commute, and Meryl's performed marriage negate self-determination from within; comfort, not the dome, is the first jailer.",
                ["the morning catchphrase", "Meryl's cocoa commercial"],
            ),
            NAX: (
                "truthful dissent",
                "Sylvia's banner, the intruders who breach the set, and the crew's doubts negate the manufactured world and pass Truman the thread that leads out of it.",
                ["Sylvia", "the 'How's it going to end?' badge"],
            ),
        },
        "relations": [
            "A chosen life and a produced one cannot coexist: the film's engine is the widening crack between Truman's will and Christof's script.",
            "Routine contradicts self-determination without a single camera; as long as Truman loves his comfortable loop, the dome never needs to hold him.",
            "Dissent is manufacture's direct negation; every unscripted word smuggled onto the set breaks the product's claim to be a world.",
            "Dissent feeds the escape: Sylvia's interrupted warning becomes the memory by which Truman measures every painted horizon.",
            "Comfort serves the producers; the show's true infrastructure is not the dome but its star's habit of staying.",
            "Routine and dissent are the show's two undercurrents, one soothing the captive and one calling him, both invisible to the broadcast's audience.",
        ],
        "summary": "Self-determination opposes the manufactured world, while comfortable routine holds Truman inside and truthful dissent pulls him out; the staircase in the painted sky is the point where all four terms meet.",
    },
    {
        "title": "Jane Eyre",
        "author": "Charlotte Brontë",
        "medium": "novel",
        "culture": "British",
        "era": "Victorian era",
        "source": "published structuralist reading of Victorian fiction",
        "terms": {
            X: (
                "self-respect and moral independence",
                "From the red-room to the proposal refused, Jane holds that she is a free human being with an independent will; her love is offered only from level ground.",
                ["Jane Eyre", "the refusal at the altar"],
            ),
            AX: (
                "patriarchal domination",
                "Brocklehurst's regime, Rochester's early gamesmanship, and St. John's cold conscription each seek to own a woman's conduct, body, or vocation.",
                ["Brocklehurst", "St. John's proposal"],
            ),
            NX: (
                "self-effacing endurance",
                "Helen Burns bears injustice by erasing the self that suffers it; her patience negates Jane's self-assertion while sharing none of the masters' will to rule.",
                ["Helen Burns", "Lowood's discipline"],
            ),
            NAX: (
                "love between equals",
                "The inheritance divided four ways, Rochester humbled, and the quiet of Ferndean negate domination; 'Reader, I married him' is the grammar of a match made freely.",
                ["the Ferndean reunion", "the shared inheritance"],
            ),
        },
        "relations": [
            "Jane's independence and the period's machinery of domination are the novel's poles; every household she enters restages the contest on new terms.",
            "Endurance negates independence from within the same small body: Helen's counsel of patience is the one Jane admires and cannot obey.",
            "Equal love contradicts domination directly; what Rochester finally offers at Ferndean is precisely what his masquerades once withheld.",
            "Equality underwrites self-respect: only with her own fortune and a humbled partner can Jane's independence live inside a marriage.",
            "Self-effacement serves the masters; the meekness Lowood teaches is the temperament domination prefers to govern.",
            "Endurance and equal love are the two gentler answers to power, suffering it faithfully or dissolving it in mutuality.",
        ],
        "summary": "Moral independence stands against patriarchal domination, while self-effacing endurance tempts Jane toward surrender and love between equals gives her independence a home; the square closes at Ferndean.",
    },
    {
        "title": "Spirited Away",
        "author": "Hayao Miyazaki",
        "medium": "film",
        "culture": "Japanese",
        "era": "21st century",
        "source": "published structuralist reading of Studio Ghibli's features",
        "terms": {
            X: (
                "selfless courage and remembrance",
                "Chihiro works, keeps her name, and remembers Haku's river; courage here is service plus memory, the refusal to let the bathhouse rename the world.",
                ["Chihiro", "the remembered river"],
            ),
            AX: (
                "consuming greed",
                "The parents gorged into pigs, No-Face swallowing the bathhouse, Yubaba's gold: greed is the resort's ruling appetite, eating names, bodies, and rivers alike.",
                ["No-Face's feast", "Yubaba's contracts"],
            ),
            NX: (
                "forgetful timidity",
                "The first Chihiro whines and clings, Haku cannot recall himself, and the bathhouse staff keep their heads down; forgetting and fear negate courage without themselves being greed.",
                ["Haku's lost name", "Chihiro at the tunnel"],
            ),
            NAX: (
                "grateful service",
                "Kamaji's good-luck charm, Lin's grudging care, the river spirit's medicine, Zeniba's plain kitchen: gifts and work done rightly negate greed and feed the girl's courage.",
                ["Kamaji", "Zeniba's cottage"],
            ),
        },
        "relations": [
            "Courage-with-memory and consuming greed contend for the bathhouse; what Chihiro keeps, the resort exists to devour.",
            "Timid forgetting is courage's inner negation: the danger is less that Chihiro will be eaten than that she will forget the name that makes her someone.",
            "Grateful service contradicts greed transaction by transaction; the river spirit pays with medicine where No-Face pays with gold, and only one of them heals.",
            "Service builds courage: every task done for another returns to Chihiro as strength, until the timid girl can ride the dragon home.",
            "Forgetting feeds the appetite; it is the nameless and fearful whom the bathhouse most easily swallows.",
            "Timidity and service share the quiet lower axis: two ways of being small in a world of appetites, one shrinking and one sustaining.",
        ],
        "summary": "Selfless courage opposes consuming greed, while forgetful timidity erodes the self and grateful service restores it; remembering the river completes the square and ends the spell.",
    },
    {
        "title": "The Great Gatsby",
        "author": "F. Scott Fitzgerald",
        "medium": "novel",
        "culture": "American",
        "era": "Jazz Age",
        "source": "published structuralist reading of the American novel",
        "terms": {
            X: (
                "romantic idealism",
                "Gatsby builds a mansion, a name, and five years of longing around a green light; his idealism bends the world toward a remembered kiss.",
                ["Gatsby", "the green light"],
            ),
            AX: (
                "careless materialism",
                "Tom and Daisy smash things and retreat into money; the Buchanans' carelessness is wealth without dream, appetite armored in class.",
                ["Tom Buchanan", "the Buchanans' retreat"],
            ),
            NX: (
                "ironic disillusion",
                "Nick's reservations, the ash-gray commentary of the valley, and Jordan's cool cynicism negate idealism without buying materialism; irony watches the dream and doubts it.",
                ["Nick Carraway", "the valley of ashes"],
            ),
            NAX: (
                "honest aspiration",
                "Young Gatz's self-improvement schedule and Wilson's garage negate careless wealth: aspiration that works for its hope and pays its debts, the raw ore the dream refines.",
                ["young Gatz's schedule", "Wilson's garage"],
            ),
        },
        "relations": [
            "The dream and the money are the novel's poles: Gatsby's idealism serves a vision, the Buchanans' materialism serves itself, and Daisy is the ground they fight over.",
            "Disillusion negates the dream from the narrator's chair; Nick admires Gatsby while itemizing everything false in the house of his hope.",
            "Honest aspiration contradicts careless wealth: Wilson at his pumps and Gatz with his schedule indict the Buchanans simply by working.",
            "Aspiration feeds idealism; the dream is the boy's self-improvement list grown monstrous and shining.",
            "Irony drifts toward the money it despises: disillusion keeps attending the parties, and its attendance is an endorsement.",
            "Disillusion and aspiration quarrel beneath the main contest, the voice that doubts the dream against the labor that built it.",
        ],
        "summary": "Romantic idealism confronts careless materialism, while ironic disillusion corrodes the dream and honest aspiration supplies its foundation; the green light holds the four corners in a single image.",
    },
    {
        "title": "Pride and Prejudice",
        "author": "Jane Austen",
        "medium": "novel",
        "culture": "British",
        "era": "Regency era",
        "source": "published structuralist reading of Austen's novels",
        "terms": {
            X: (
                "discerning love",
                "Elizabeth and Darcy arrive at love as a judgment corrected in both directions: esteem earned by conduct, not extracted by rank or need.",
                ["Elizabeth Bennet", "the Pemberley reassessment"],
            ),
            AX: (
                "mercenary alliance",
                "Charlotte's arithmetic, Wickham's fortune-hunting, and Lady Catherine's dynastic plans treat marriage as a market in which affection is at best a rounding error.",
                ["Mr. Collins's proposal", "Lady Catherine's demands"],
            ),
            NX: (
                "first-impression prejudice",
                "The assembly-room slight and the charm of a red coat negate discernment from within: judgment that moves too quickly on too little, in love with its own wit.",
                ["the Meryton assembly", "Wickham's tale"],
            ),
            NAX: (
                "candid good nature",
                "Jane's refusal to think ill and Bingley's open temper negate the market's calculations and give discernment its material: affection already honest, needing only clear sight.",
                ["Jane Bennet", "Bingley"],
            ),
        },
        "relations": [
            "Discerning love and mercenary alliance divide the marriage plot: every proposal in the novel falls on one side or the other of that line.",
            "Prejudice is discernment's private negation; Elizabeth's quickness misreads both Darcy and Wickham before it learns to read her own vanity.",
            "Candor contradicts calculation: Jane's good nature cannot even perceive the schemes that Charlotte's prudence accepts as the terms of the world.",
            "Good nature supplies love's substance; Elizabeth's discernment completes what Jane's candor begins, affection cleared of illusion.",
            "Prejudice plays into the market's hands: misjudgment nearly awards Wickham the prize and nearly costs Pemberley its mistress.",
            "Prejudice and candor share the lower axis, swift judgment against charitable blindness, the two errors sense must steer between.",
        ],
        "summary": "Love founded on discernment opposes the marriage market's calculations, while hasty prejudice misleads judgment and candid good nature steadies it; the square resolves when esteem and affection finally coincide.",
    },
    {
        "title": "Agamemnon",
        "author": "Aeschylus",
        "medium": "play",
        "culture": "Ancient Greek",
        "era": "Ancient Greece",
        "source": "published structuralist reading of Attic tragedy",
        "terms": {
            X: (
                "retributive justice",
                "The net, the axe, and Clytemnestra's welcome answer Iphigenia's death; justice in the house of Atreus is repayment, blood demanded for blood.",
                ["Clytemnestra", "the crimson tapestries"],
            ),
            AX: (
                "hubristic triumph",
                "Troy sacked, altars profaned, a king treading purple: triumph that forgets measure calls down what it cannot survive.",
                ["Agamemnon on the tapestries", "the herald's boasts"],
            ),
            NX: (
                "prophecy without power",
                "Cassandra sees the whole chain of murder and can prevent none of it; seeing negates the act of justice while commanding none of triumph's force.",
                ["Cassandra", "the vision at the door"],
            ),
            NAX: (
                "civic measure and dread",
                "The chorus's fear of excess and its maxims on suffering-into-wisdom negate hubris and keep alive the city's idea of ordered justice.",
                ["the chorus of elders", "the hymn to Zeus"],
            ),
        },
        "relations": [
            "Retribution and hubris drive the tragedy's main axis: the king's immoderate triumph and the queen's immoderate remedy deserve each other.",
            "Cassandra's knowledge negates the act: where Clytemnestra strikes, the prophetess can only see, and her seeing changes nothing.",
            "The elders' dread contradicts the king's pride; their warnings against trampled altars are spoken across the very purple he treads.",
            "Civic measure lends retribution its warrant: the chorus's own doctrine, that the doer suffers, is the law Clytemnestra claims to execute.",
            "Powerless foresight attends on triumph; Cassandra enters Argos as part of the conqueror's spoils, her knowledge itself a trophy of his excess.",
            "Prophecy and civic dread share the watchers' axis, two voices that understand the house's doom and cannot stop it.",
        ],
        "summary": "Retributive justice and hubristic triumph destroy each other in the house of Atreus, while powerless prophecy and civic dread watch from below; the square maps a tragedy in which every corner understands the murder and none prevents it.",
    },
    {
        "title": "The Metamorphosis",
        "author": "Franz Kafka",
        "medium": "novel",
        "culture": "Austrian-Czech",
        "era": "20th century",
        "source": "published structuralist reading of Kafka's short fiction",
        "terms": {
            X: (
                "human selfhood",
                "Inside the carapace Gregor keeps his worries, his tenderness, and his taste for the violin; the story's wager is how much self survives when the body stops cooperating.",
                ["Gregor's thoughts", "the violin scene"],
            ),
            AX: (
                "dehumanizing function",
                "The firm's clock, the chief clerk at the door, and the family ledger value Gregor exactly at his output; when the body fails, the person is overhead.",
                ["the chief clerk's visit", "the train timetable"],
            ),
            NX: (
                "creaturely estrangement",
                "The new body, the taste for scraps, the scuttling under the couch negate selfhood without any of the office's intent; estrangement is negation grown organic.",
                ["the apple in the back", "the ceiling-crawling"],
            ),
            NAX: (
                "familial care",
                "Grete's milk and cleared furniture and the mother's plea negate the ledger's arithmetic for a while: care values Gregor as kin, not function, and while it lasts his selfhood has a room to live in.",
                ["Grete's early feeding", "the mother's defense"],
            ),
        },
        "relations": [
            "Selfhood and function are the story's poles: the office, and the household run like one, can use a Gregor, but it has no category for him.",
            "Estrangement negates the self bodily; the voice that answers the clerk through the door is Gregor's mind in a throat that no longer carries it.",
            "Care contradicts function: for as long as Grete feeds what cannot earn, the family's arithmetic is suspended.",
            "Care hosts the self: Gregor remains someone exactly as long as someone treats him so, and the music at the door is the last such hospitality.",
            "Estrangement completes the office's logic; the body that cannot work becomes the thing the ledger always said it was, and disposal follows.",
            "Estrangement and care divide the sickroom between them, the lodger's horror against the sister's basin, until care tires and the axis collapses.",
        ],
        "summary": "Human selfhood stands against dehumanizing function, while creaturely estrangement strips the self from below and familial care briefly shelters it; the square closes when care withdraws and the charwoman sweeps the result away.",
    },
]

_MODEL_ROTATION = [
    "Qwen2.5 (2025-01)",
    "Kimi (2025-01)",
    "GPT-4o (2025-01)",
    "GPT-4o mini (2025-01)",
    "DeepSeek-V3 (2025-02)",
]

GENERATED_WORKS = [
    {
        "title": "Journey to the West",
        "author": "Wu Cheng'en",
        "medium": "novel",
        "culture": "Chinese",
        "era": "Ming dynasty",
        "model": "Qwen2.5 (2025-02)",
        "terms": {
            X: (
                "idealism and quest for enlightenment",
                "Tang Sanzang's westward pilgrimage stakes the novel on the pursuit of spiritual growth: every tribulation is endured for the sake of the scriptures and the enlightenment they promise.",
                ["Tang Sanzang", "the pilgrimage for scriptures"],
            ),
            AX: (
                "materialism and rebellion against authority",
                "Sun Wukong's havoc in heaven and appetite for rank reject spiritual constraint, and the demons who crave the pilgrim's flesh literalize appetite set against the quest.",
                ["Sun Wukong's havoc in heaven", "the demon kings"],
            ),
            NX: (
                "skepticism and practical wisdom",
                "Zhu Bajie grumbles and schemes while Sha Wujing keeps the baggage moving; their earthbound doubts check the quest's idealism without ever opposing it outright.",
                ["Zhu Bajie", "Sha Wujing"],
            ),
            NAX: (
                "compliance and submission to authority",
                "The heavenly hierarchy and the Buddha's order make the pilgrimage possible, and Sun Wukong's eventual submission under the golden headband converts rebellion into service.",
                ["the Buddha", "Guanyin", "the golden headband"],
            ),
        },
        "relations": [
            "The pilgrimage's idealism and the rebel's materialism form the core conflict that sets the journey in motion and gives every episode its stakes.",
            "Skepticism and practical wisdom puncture idealism's excesses while remaining inside the quest rather than against it.",
            "Submission to authority directly negates rebellion, most visibly when Wukong bows to the Buddha he once defied.",
            "Compliance shelters the quest: the heavenly powers intervene again and again so that enlightenment stays within reach.",
            "The disciples' doubts lean toward appetite and self-interest, the same ground from which rebellion springs.",
            "Practical doubt and obedient service form the quieter second opposition of the square, the two tempers that keep the company on the road.",
        ],
        "summary": "Idealism and the quest for enlightenment stand against materialism and rebellion against authority, while skepticism balances the ideal and compliance with authority sustains the journey; the interplay of the four positions generates the novel's meaning.",
    },
    {
        "title": "One Hundred Years of Solitude",
        "author": "Gabriel García Márquez",
        "medium": "novel",
        "culture": "Colombian",
        "era": "20th century",
        "terms": {
            X: (
                "mythic imagination",
                "The ice, the flying carpets, and Melquíades' returns from death: Macondo runs on a wonder that treats miracle as household fact.",
                ["Melquíades", "the discovery of ice"],
            ),
            AX: (
                "historical catastrophe",
                "The thirty-two wars and the banana company's trains of dead bring history to Macondo as repetition and erasure.",
                ["the banana massacre", "Colonel Aureliano's wars"],
            ),
            NX: (
                "rational modernity",
                "The railroad, the company engineers, and the official denial of the massacre negate wonder with paperwork and progress.",
                ["the railroad", "the official denial"],
            ),
            NAX: (
                "ancestral memory",
                "Úrsula's long vigilance and the parchments that hold the family's entire time negate erasure and keep the town's enchantment legible.",
                ["Úrsula", "the parchments"],
            ),
        },
        "note": "Macondo is built by wonder and unmade by the history that arrives on the railroad.",
        "summary": "Mythic imagination and historical catastrophe contend for Macondo, while rational modernity disenchants the town and ancestral memory preserves it; when the last parchment is read, the square and the town close together.",
    },
    {
        "title": "War and Peace",
        "author": "Leo Tolstoy",
        "medium": "novel",
        "culture": "Russian",
        "era": "19th century",
        "terms": {
            X: (
                "organic life and peace",
                "The Rostov household, Natasha's dance, and the round fullness of family time carry the novel's case for life lived rather than administered.",
                ["Natasha Rostova", "the name-day feast"],
            ),
            AX: (
                "the machinery of war",
                "Austerlitz, Borodino, and the burning of Moscow show war as a vast impersonal mechanism that consumes biographies without consulting them.",
                ["Borodino", "the burning of Moscow"],
            ),
            NX: (
                "worldly vanity",
                "Petersburg salons, Hélène's marriages, and careers made at court negate living fullness while never firing a shot.",
                ["Anna Pavlovna's salon", "Hélène"],
            ),
            NAX: (
                "searching conscience",
                "Pierre's questions, Andrei's sky at Austerlitz, and Karataev's acceptance negate the machine by refusing its meanings, and ripen into peace.",
                ["Pierre Bezukhov", "the sky at Austerlitz"],
            ),
        },
        "note": "the novel weighs the fullness of lived peace against the machine of war that devours it.",
        "summary": "Organic life opposes the machinery of war, while worldly vanity hollows life from within and searching conscience finds the way back to it; the epilogue's crowded nursery is the square's resolution.",
    },
    {
        "title": "The Hunchback of Notre-Dame",
        "author": "Victor Hugo",
        "medium": "novel",
        "culture": "French",
        "era": "19th century",
        "terms": {
            X: (
                "selfless devotion",
                "Quasimodo's sanctuary and his silent service on the towers give love with no expectation of return.",
                ["Quasimodo", "the cry of sanctuary"],
            ),
            AX: (
                "possessive obsession",
                "Frollo's desire, dressed as piety and scholarship, must own what it loves or destroy it.",
                ["Claude Frollo", "the alchemist's cell"],
            ),
            NX: (
                "fickle infatuation",
                "Phoebus's gallantry glitters and commits to nothing; it negates devotion while wanting none of obsession's cost.",
                ["Phoebus", "the balcony scene"],
            ),
            NAX: (
                "innocent compassion",
                "Esmeralda's water for the man on the pillory refuses obsession's grasping and gives devotion its example.",
                ["Esmeralda", "the water at the pillory"],
            ),
        },
        "note": "beneath the cathedral, love divides into a devotion that gives and an obsession that takes.",
        "summary": "Selfless devotion confronts possessive obsession, while fickle infatuation cheapens love and innocent compassion redeems it; the cathedral holds all four figures in its shadow.",
    },
    {
        "title": "Robinson Crusoe",
        "author": "Daniel Defoe",
        "medium": "novel",
        "culture": "British",
        "era": "18th century",
        "terms": {
            X: (
                "industrious self-reliance",
                "The journal, the palisade, and the first harvest turn shipwreck into settlement by steady labor.",
                ["the journal", "the grain plot"],
            ),
            AX: (
                "unmastered wilderness",
                "The storm, the raw island, and the cannibals' fires are the world before and against cultivation.",
                ["the shipwreck", "the footprint"],
            ),
            NX: (
                "restless wandering",
                "The runaway voyage against the father's counsel negates settled industry from within Crusoe's own temper.",
                ["the first voyage", "the father's warning"],
            ),
            NAX: (
                "providential order",
                "The sprouted corn read as grace and the Bible opened in fever negate wilderness-as-chaos and underwrite the work of settlement.",
                ["the sprouted corn", "the illness conversion"],
            ),
        },
        "note": "the island stages a contest between the work of settlement and the wild that precedes it.",
        "summary": "Industrious self-reliance opposes the unmastered wild, while restless wandering keeps unsettling the settler and providential order steadies him; the square is the island's whole economy.",
    },
    {
        "title": "The Little Prince",
        "author": "Antoine de Saint-Exupéry",
        "medium": "novel",
        "culture": "French",
        "era": "20th century",
        "terms": {
            X: (
                "childlike wonder and attachment",
                "A sheep in a box and one rose worth a sky of stars: the prince's wonder binds him to what he loves.",
                ["the rose", "the drawing of the sheep"],
            ),
            AX: (
                "grown-up utility",
                "Counting stars to own them and lighting lamps by order, the adults reduce every tie to use and number.",
                ["the businessman", "the king"],
            ),
            NX: (
                "lonely detachment",
                "The pilot's desert solitude and the prince's flight from his rose negate attachment without adopting the adults' arithmetic.",
                ["the desert", "leaving the rose"],
            ),
            NAX: (
                "taming and responsible love",
                "The fox's rite of taming negates utility's logic and makes wonder into obligation: you become responsible for what you have tamed.",
                ["the fox", "the taming lesson"],
            ),
        },
        "note": "the book sets the child's taming gaze against the adults' arithmetic of use.",
        "summary": "Childlike wonder opposes grown-up utility, while lonely detachment shadows the wanderer and the fox's taming turns wonder into responsibility; the square closes under one falling star.",
    },
    {
        "title": "Hamlet",
        "author": "William Shakespeare",
        "medium": "play",
        "culture": "British",
        "era": "Elizabethan era",
        "terms": {
            X: (
                "decisive action",
                "The Ghost's commission demands an act, and the play's last scene finally delivers it in a sweep of poisoned steel.",
                ["the Ghost's command", "the final duel"],
            ),
            AX: (
                "paralyzed hesitation",
                "The prayer scene spared and the resolutions argued away: hesitation is the counter-force that thought breeds.",
                ["the prayer scene", "the fourth soliloquy"],
            ),
            NX: (
                "staged pretense",
                "The antic disposition and the Mousetrap substitute performance for deed, negating action while rehearsing it.",
                ["the antic disposition", "The Mousetrap"],
            ),
            NAX: (
                "steady resolve",
                "Fortinbras marching for an eggshell and Horatio's constancy negate hesitation and model the act the prince circles.",
                ["Fortinbras", "Horatio"],
            ),
        },
        "note": "the play suspends its prince between the act demanded and the delay that thought breeds.",
        "summary": "Decisive action contends with paralyzed hesitation, while staged pretense defers the deed and steady resolve shames the delay; the square snaps shut in the final scene's general slaughter.",
    },
    {
        "title": "Don Quixote",
        "author": "Miguel de Cervantes",
        "medium": "novel",
        "culture": "Spanish",
        "era": "17th century",
        "terms": {
            X: (
                "chivalric idealism",
                "Giants where windmills stand and a peerless lady in a village girl: the knight's idealism remakes the world by decree.",
                ["the windmills", "Dulcinea"],
            ),
            AX: (
                "prosaic reality",
                "Innkeepers' bills, broken teeth, and a basin that is only a basin answer every charge the ideal makes.",
                ["the inn reckonings", "the drubbings"],
            ),
            NX: (
                "mocking artifice",
                "The ducal pranks and the Knight of the White Moon counterfeit chivalry to defeat it, negating the ideal with its own costume.",
                ["the ducal pranks", "the Knight of the White Moon"],
            ),
            NAX: (
                "loyal pragmatism",
                "Sancho's proverbs and donkey-sense negate bare prose by serving the ideal anyway, hoping for the island and staying for the man.",
                ["Sancho Panza", "the governorship"],
            ),
        },
        "note": "the novel rides an impossible ideal straight into the prose of the world.",
        "summary": "Chivalric idealism breaks against prosaic reality, while mocking artifice counterfeits the ideal and loyal pragmatism humanizes it; the square rides out on one horse and one donkey.",
    },
    {
        "title": "Gone with the Wind",
        "author": "Margaret Mitchell",
        "medium": "novel",
        "culture": "American",
        "era": "20th century",
        "terms": {
            X: (
                "tenacious survival",
                "The radish oath and the mills after the fire: Scarlett's will fastens on whatever the next day requires.",
                ["Scarlett O'Hara", "the oath at Tara"],
            ),
            AX: (
                "vanished gentility",
                "The barbecue world of Twelve Oaks burns, and with it the codes that assigned everyone a place and a script.",
                ["Twelve Oaks", "the old order's fall"],
            ),
            NX: (
                "romantic nostalgia",
                "Ashley's backward gaze negates survival's forward drive while restoring nothing it mourns.",
                ["Ashley Wilkes", "the dream of the old South"],
            ),
            NAX: (
                "unsentimental realism",
                "Rhett's profiteering clarity negates gentility's illusions and, for a time, bankrolls survival's ventures.",
                ["Rhett Butler", "the blockade runs"],
            ),
        },
        "note": "the burned South leaves survival and remembered gentility to fight over what living now means.",
        "summary": "Tenacious survival stands against vanished gentility, while romantic nostalgia drags at the survivor and unsentimental realism equips her; the square ends at Tara with tomorrow's famous postponement.",
    },
    {
        "title": "The Catcher in the Rye",
        "author": "J. D. Salinger",
        "medium": "novel",
        "culture": "American",
        "era": "20th century",
        "terms": {
            X: (
                "protective innocence",
                "The catcher fantasy, the museum's stillness, and the erased graffiti all guard a childhood the narrator cannot keep.",
                ["the catcher dream", "the carousel"],
            ),
            AX: (
                "adult phoniness",
                "Pencey's handshakes and the nightclub poses perform a world where every surface is for sale.",
                ["the headmaster's handshake", "the nightclub crowd"],
            ),
            NX: (
                "adolescent cynicism",
                "Holden's own sneer negates innocence while despising phoniness; it is the voice of someone locked out of both.",
                ["Holden's narration", "the red hunting hat"],
            ),
            NAX: (
                "unguarded candor",
                "Phoebe's directness and Allie's remembered glove negate performance and give innocence a living face.",
                ["Phoebe", "Allie's baseball mitt"],
            ),
        },
        "note": "Holden guards a shrinking island of innocence against the performances of the grown world.",
        "summary": "Protective innocence opposes adult phoniness, while the narrator's own cynicism erodes what he guards and his sister's candor restores it; the square turns with the carousel in the rain.",
    },
    {
        "title": "A Brief History of Time",
        "author": "Stephen Hawking",
        "medium": "other",
        "culture": "British",
        "era": "20th century",
        "terms": {
            X: (
                "intelligible law",
                "The book's wager is a complete theory: a universe whose beginnings and ends submit to equations anyone could, in principle, read.",
                ["the unification program", "the laws of gravitation"],
            ),
            AX: (
                "cosmic inscrutability",
                "Singularities and event horizons mark the places where the known laws break off and the universe keeps its counsel.",
                ["the big bang singularity", "black holes"],
            ),
            NX: (
                "commonsense intuition",
                "Absolute clocks and flat space negate the deep laws by oversimplifying them; everyday sense is the physics it feels like.",
                ["absolute time", "the twin paradox surprise"],
            ),
            NAX: (
                "mathematical imagination",
                "Imaginary time and thought experiments negate inscrutability by giving the unpicturable a notation and a handle.",
                ["imaginary time", "the light-cone diagrams"],
            ),
        },
        "note": "the book wagers that imagination armed with mathematics can read a universe that hides its beginnings.",
        "summary": "Intelligible law faces cosmic inscrutability, while commonsense intuition undersells the universe and mathematical imagination reaches the parts of it that hide; the square frames the search for a complete theory.",
    },
    {
        "title": "Crime and Punishment",
        "author": "Fyodor Dostoevsky",
        "medium": "novel",
        "culture": "Russian",
        "era": "19th century",
        "terms": {
            X: (
                "redemptive conscience",
                "The crossroads confession and the Siberian dawn mark conscience's slow victory over the theory that licensed the axe.",
                ["the crossroads confession", "the epilogue's dawn"],
            ),
            AX: (
                "self-exempting will",
                "The article on extraordinary men claims the right to step over; the murder is the theory carried to the pawnbroker's door.",
                ["the article on crime", "the murder"],
            ),
            NX: (
                "utilitarian calculation",
                "The tavern arithmetic of one death against a thousand lives negates conscience without the will's Napoleonic grandeur.",
                ["the tavern arithmetic", "the pawnbroker's ledger"],
            ),
            NAX: (
                "suffering love",
                "Sonya's reading of Lazarus and her road to Siberia negate the exempted self and carry conscience until it can walk.",
                ["Sonya", "the reading of Lazarus"],
            ),
        },
        "note": "the novel splits its hero between the will that exempts itself from law and the conscience that cannot.",
        "summary": "Redemptive conscience contends with the self-exempting will, while utilitarian calculation supplies the crime's alibi and suffering love supplies its cure; the square closes on the prison riverbank.",
    },
    {
        "title": "Wuthering Heights",
        "author": "Emily Brontë",
        "medium": "novel",
        "culture": "British",
        "era": "19th century",
        "terms": {
            X: (
                "wild consuming passion",
                "Catherine's declaration that she is Heathcliff and the moor's weather inside the house: passion here is identity, not sentiment.",
                ["Catherine's declaration", "the moors"],
            ),
            AX: (
                "tame civility",
                "Thrushcross Grange's carpets, manners, and mild affections domesticate everything the Heights leaves raw.",
                ["the Grange", "Edgar Linton"],
            ),
            NX: (
                "vindictive cruelty",
                "Heathcliff's long revenge is passion curdled into the negation of love itself, punishing the next generation for the last.",
                ["the revenge on Hareton", "Isabella's marriage"],
            ),
            NAX: (
                "gentle affection",
                "The second generation's reading lessons negate mere civility with real tenderness and let the old passion finally rest.",
                ["young Cathy and Hareton", "the reading lessons"],
            ),
        },
        "note": "the Heights and the Grange divide love between storm and parlor.",
        "summary": "Wild passion stands against tame civility, while vindictive cruelty shows passion's ruin and gentle affection shows its repair; the square quiets with the grave-side heath.",
    },
    {
        "title": "A Tale of Two Cities",
        "author": "Charles Dickens",
        "medium": "novel",
        "culture": "British",
        "era": "19th century",
        "terms": {
            X: (
                "redeeming sacrifice",
                "The exchange at the prison and the scaffold speech turn a wasted life into the book's one unanswerable act.",
                ["Sydney Carton", "the scaffold speech"],
            ),
            AX: (
                "vengeful terror",
                "The knitted register and La Guillotine repay oppression with arithmetic of their own, head for head.",
                ["Madame Defarge", "the Terror"],
            ),
            NX: (
                "dissolute drift",
                "The jackal nights and the drink negate sacrifice as mere self-squandering, spending a life with nothing purchased.",
                ["the jackal nights", "the tavern evenings"],
            ),
            NAX: (
                "quiet fidelity",
                "Lucie's golden thread and Lorry's stewardship negate terror's logic and make the sacrifice worth its price.",
                ["Lucie Manette", "Mr. Lorry"],
            ),
        },
        "note": "revolutionary vengeance and personal sacrifice contend over what blood can buy.",
        "summary": "Redeeming sacrifice answers vengeful terror, while dissolute drift wastes the same life that fidelity finally gives a reason; the far, far better thing closes the square.",
    },
    {
        "title": "Oliver Twist",
        "author": "Charles Dickens",
        "medium": "novel",
        "culture": "British",
        "era": "19th century",
        "terms": {
            X: (
                "innate innocence",
                "Oliver asks for more and stays unspoiled through every den the city drags him into.",
                ["Oliver", "the request for more"],
            ),
            AX: (
                "criminal corruption",
                "Fagin's school for thieves and Sikes's violence run an economy that feeds on children.",
                ["Fagin's den", "Bill Sikes"],
            ),
            NX: (
                "institutional indifference",
                "The workhouse board and charity by regulation negate innocence through neglect rather than design.",
                ["the workhouse", "Mr. Bumble"],
            ),
            NAX: (
                "active benevolence",
                "Brownlow's rescue and Nancy's fatal kindness negate the criminal world from within its own reach.",
                ["Mr. Brownlow", "Nancy"],
            ),
        },
        "note": "the novel tests a child's innocence against a city organized to corrupt it.",
        "summary": "Innate innocence faces criminal corruption, while institutional indifference starves the child the benevolent finally save; the square is the city's moral map.",
    },
    {
        "title": "Kafka on the Shore",
        "author": "Haruki Murakami",
        "medium": "novel",
        "culture": "Japanese",
        "era": "21st century",
        "terms": {
            X: (
                "fated self-discovery",
                "The runaway who names himself Crow walks into the prophecy he flees, and through it into himself.",
                ["Kafka Tamura", "the prophecy"],
            ),
            AX: (
                "devouring violence",
                "Johnnie Walker's flutes of cat souls and the curse's appetite are the novel's principle of consumption.",
                ["Johnnie Walker", "the cat killings"],
            ),
            NX: (
                "emptied forgetting",
                "Nakata's wiped memory and half shadow negate the burden of self without any of violence's intent.",
                ["Nakata", "the wartime incident"],
            ),
            NAX: (
                "uncanny guidance",
                "Oshima's library, Colonel Sanders, and the entrance stone negate the curse by keeping the path open and tended.",
                ["Oshima", "the entrance stone"],
            ),
        },
        "note": "the novel sends a runaway self toward the very prophecy it flees.",
        "summary": "Fated self-discovery contends with devouring violence, while emptied forgetting offers escape at the price of self and uncanny guidance keeps the true way open; the square closes when the library reopens.",
    },
    {
        "title": "The Shawshank Redemption",
        "author": "Frank Darabont",
        "medium": "film",
        "culture": "American",
        "era": "20th century",
        "terms": {
            X: (
                "hope and inner freedom",
                "The Mozart over the yard and the rock hammer in the Bible keep a free man inside the convict.",
                ["Andy Dufresne", "the Mozart broadcast"],
            ),
            AX: (
                "institutional brutality",
                "The warden's scripture and ledgers and the hole administer a world built to absorb lives.",
                ["Warden Norton", "solitary"],
            ),
            NX: (
                "institutionalized resignation",
                "Brooks's terror of parole negates hope by adaptation: the walls move inside the man.",
                ["Brooks Hatlen", "the halfway-house room"],
            ),
            NAX: (
                "patient friendship",
                "Red's procurements and his kept promise negate the institution's isolation and keep hope fed for decades.",
                ["Red", "the harmonica"],
            ),
        },
        "note": "the prison sets a man's inner freedom against a system built to absorb it.",
        "summary": "Hope opposes institutional brutality, while resignation shows what the walls do to the unaccompanied and friendship keeps one man unabsorbed; the square opens onto a Pacific beach.",
    },
    {
        "title": "Forrest Gump",
        "author": "Robert Zemeckis",
        "medium": "film",
        "culture": "American",
        "era": "20th century",
        "terms": {
            X: (
                "simple-hearted constancy",
                "The promise kept to Bubba and the long run across the country hold one temper steady through three decades.",
                ["Forrest", "the shrimp-boat promise"],
            ),
            AX: (
                "turbulent disillusion",
                "The war, the assassinations, and the movements that chew up the years supply the history constancy walks through.",
                ["the Vietnam sequence", "the rallies"],
            ),
            NX: (
                "ironic drift",
                "The poses and parties that mock simplicity negate constancy without offering anything to hold.",
                ["the counterculture scenes", "Jenny's boyfriends"],
            ),
            NAX: (
                "homeward devotion",
                "Mrs. Gump's proverbs, Jenny's return, and Lieutenant Dan's peace negate disillusion at the only scale it can be beaten: the personal.",
                ["Mrs. Gump", "Lieutenant Dan's reconciliation"],
            ),
        },
        "note": "a guileless constancy runs straight through three decades of national turbulence.",
        "summary": "Simple-hearted constancy crosses an era of turbulent disillusion, while ironic drift squanders the years and homeward devotion redeems them; the square settles at the bus stop bench.",
    },
    {
        "title": "The Kite Runner",
        "author": "Khaled Hosseini",
        "medium": "novel",
        "culture": "Afghan-American",
        "era": "21st century",
        "terms": {
            X: (
                "atoning loyalty",
                "The call that there is a way to be good again sends Amir back for Sohrab and into the debt he fled.",
                ["the return to Kabul", "the final kite"],
            ),
            AX: (
                "cowardly betrayal",
                "The alley unwatched and the watch planted under a mattress are the treasons the whole book answers.",
                ["the alley", "the framed theft"],
            ),
            NX: (
                "forgetful exile",
                "America as amnesia negates atonement by distance; a new life is built on an unpaid debt.",
                ["the Fremont flea market", "the new life"],
            ),
            NAX: (
                "unconditional devotion",
                "Hassan's thousand-times-over negates betrayal in advance and fixes the measure atonement must meet.",
                ["Hassan", "the blue kite"],
            ),
        },
        "note": "a betrayal in one alley sets the terms for a lifetime's atonement.",
        "summary": "Atoning loyalty answers cowardly betrayal, while forgetful exile defers the debt and unconditional devotion defines it; the square closes over a kite in a San Francisco park.",
    },
    {
        "title": "To Kill a Mockingbird",
        "author": "Harper Lee",
        "medium": "novel",
        "culture": "American",
        "era": "20th century",
        "terms": {
            X: (
                "principled justice",
                "The hopeless case taken anyway: Atticus's defense holds the town to a standard it refuses.",
                ["Atticus Finch", "the courtroom defense"],
            ),
            AX: (
                "communal prejudice",
                "The verdict and the jailhouse mob enforce the caste the court was meant to judge.",
                ["the jury", "the jailhouse mob"],
            ),
            NX: (
                "childhood naivety",
                "Scout's unknowing questions negate reasoned justice while, for one night, disarming the mob reason couldn't.",
                ["Scout", "the mob dispersed"],
            ),
            NAX: (
                "neighborly decency",
                "Boo's interventions and Maudie's steadiness negate prejudice at the garden-fence scale where it lives.",
                ["Boo Radley", "Miss Maudie"],
            ),
        },
        "note": "one town's prejudice is measured against a single standard of principled justice.",
        "summary": "Principled justice confronts communal prejudice, while childhood naivety sees past the categories and neighborly decency quietly crosses them; the square ends on the Radley porch.",
    },
    {
        "title": "Little Women",
        "author": "Louisa May Alcott",
        "medium": "novel",
        "culture": "American",
        "era": "19th century",
        "terms": {
            X: (
                "domestic affection and virtue",
                "The hearth economy of the Marches, with its Christmas breakfast given away, makes a home the moral unit of the world.",
                ["Marmee", "the Christmas breakfast"],
            ),
            AX: (
                "worldly vanity",
                "The Moffats' party polish and Aunt March's money-views measure people by show and settlement.",
                ["the Moffats' party", "Aunt March"],
            ),
            NX: (
                "restless independence",
                "Jo's refusals and her New York winter negate domesticity creatively, leaving home to find work worth doing.",
                ["Jo's writing", "the refusal of Laurie"],
            ),
            NAX: (
                "self-denying generosity",
                "Beth's quiet service negates vanity absolutely and anchors the home the others orbit.",
                ["Beth", "the little piano"],
            ),
        },
        "note": "the March hearth weighs its affections against the world's glitter.",
        "summary": "Domestic affection stands against worldly vanity, while restless independence leaves home to grow and self-denying generosity holds home together; the square gathers again at Plumfield.",
    },
    {
        "title": "The Moon and Sixpence",
        "author": "W. Somerset Maugham",
        "medium": "novel",
        "culture": "British",
        "era": "20th century",
        "terms": {
            X: (
                "consuming artistic vocation",
                "The brokerage abandoned and the final murals painted blind: Strickland's calling burns off every obligation around it.",
                ["Strickland", "the final murals"],
            ),
            AX: (
                "respectable convention",
                "The dinner-party circuit and the decencies of Ashley Gardens are the life the vocation walks out on.",
                ["the Stricklands' drawing room", "the dinner-party circuit"],
            ),
            NX: (
                "worldly compromise",
                "Painting to please and selling charm negate vocation from inside art itself.",
                ["fashionable portraiture", "the dealer's taste"],
            ),
            NAX: (
                "reverent devotion to beauty",
                "Stroeve's recognition and forgiveness negate convention's blindness and serve the vocation he cannot share.",
                ["Dirk Stroeve", "the rescued canvas"],
            ),
        },
        "note": "the novel strips a life to the bare antagonism of art against decency.",
        "summary": "Consuming vocation opposes respectable convention, while worldly compromise dilutes art and reverent devotion serves it without reward; the square burns with the hut at the end.",
    },
    {
        "title": "Walden",
        "author": "Henry David Thoreau",
        "medium": "other",
        "culture": "American",
        "era": "19th century",
        "terms": {
            X: (
                "deliberate living",
                "The cabin built by hand and the bean-field ledger make a life an experiment conducted on purpose.",
                ["the cabin", "the bean-field"],
            ),
            AX: (
                "quiet desperation",
                "Lives mortgaged to farms and opinions, spending what they cannot name for what they do not want.",
                ["the indebted farmers", "the railroad's bustle"],
            ),
            NX: (
                "aimless idleness",
                "Loafing without design negates deliberateness while refusing the market too; it is leisure with no experiment in it.",
                ["aimless leisure", "the loungers"],
            ),
            NAX: (
                "attentive economy",
                "The accounts kept to the half-cent and the pond sounded to the foot negate desperation by knowing exactly what life costs.",
                ["the accounts in Economy", "the pond survey"],
            ),
        },
        "note": "the experiment at the pond opposes a deliberate life to the village's quiet desperation.",
        "summary": "Deliberate living stands against quiet desperation, while aimless idleness counterfeits freedom and attentive economy proves it affordable; the square is the experiment's full accounting.",
    },
    {
        "title": "Titanic",
        "author": "James Cameron",
        "medium": "film",
        "culture": "American",
        "era": "20th century",
        "terms": {
            X: (
                "liberating love",
                "The flight at the bow and the spitting lessons unlock a life that first class had already scheduled.",
                ["Jack and Rose", "the flying scene"],
            ),
            AX: (
                "rigid class pride",
                "The first-class dinners as cage and the steerage gates locked in the flood enforce the ship's strata to the end.",
                ["Cal Hockley", "the locked gates"],
            ),
            NX: (
                "dutiful conformity",
                "The endured engagement and the corset-tight instructions negate love by obedience rather than pride.",
                ["Ruth's instructions", "the engagement"],
            ),
            NAX: (
                "self-forgetting sacrifice",
                "The band playing on and the door given up negate class pride at the end and complete what love began.",
                ["the band", "Jack's death"],
            ),
        },
        "note": "a love across decks contends with the ship's iron stratification.",
        "summary": "Liberating love defies rigid class pride, while dutiful conformity nearly smothers it and self-forgetting sacrifice seals it; the square goes down with the ship and surfaces in a name.",
    },
    {
        "title": "Schindler's List",
        "author": "Steven Spielberg",
        "medium": "film",
        "culture": "American",
        "era": "20th century",
        "terms": {
            X: (
                "redemptive rescue",
                "The list and the Brinnlitz factory turn a war profiteer's apparatus into an ark.",
                ["the list", "the Brinnlitz factory"],
            ),
            AX: (
                "industrialized genocide",
                "The liquidation of the ghetto and Płaszów's casual executions run murder as administration.",
                ["Amon Göth", "the ghetto liquidation"],
            ),
            NX: (
                "profiteering neutrality",
                "The enamelware margins and black-market deals negate rescue while serving no ideology at all.",
                ["the enamel factory's first ledger", "the black-market deals"],
            ),
            NAX: (
                "witnessing fidelity",
                "Stern's typed names and the ring from gold teeth negate the machine name by name.",
                ["Itzhak Stern", "the inscribed ring"],
            ),
        },
        "note": "one man's commerce turns against the machinery of extermination around it.",
        "summary": "Redemptive rescue stands against industrialized genocide, while profiteering neutrality is the ground rescue grew from and witnessing fidelity is its instrument; the square is weighed in the final stones on a grave.",
    },
    {
        "title": "Inception",
        "author": "Christopher Nolan",
        "medium": "film",
        "culture": "American",
        "era": "21st century",
        "terms": {
            X: (
                "return to the real",
                "The children's unturned faces and the wobbling top stake the film on a homecoming that can be trusted.",
                ["Cobb's homecoming", "the spinning top"],
            ),
            AX: (
                "seductive limbo",
                "The crumbling shore of a dreamed lifetime offers everything but reality, forever.",
                ["limbo", "the fifty shared years"],
            ),
            NX: (
                "corrosive doubt",
                "Mal's projection and the question under every level negate the real by suspicion rather than seduction.",
                ["Mal's projection", "the planted doubt"],
            ),
            NAX: (
                "shared craft and trust",
                "The team's levels and synchronized kicks negate limbo's solitude and engineer the way back.",
                ["Ariadne", "the synchronized kicks"],
            ),
        },
        "note": "the film stakes a mind's homecoming against the dream that would keep it.",
        "summary": "The return to the real contends with seductive limbo, while corrosive doubt undermines every waking and shared craft builds the way home; the square spins with the unwatched top.",
    },
    {
        "title": "The Godfather",
        "author": "Francis Ford Coppola",
        "medium": "film",
        "culture": "American",
        "era": "20th century",
        "terms": {
            X: (
                "family loyalty",
                "The wedding-day favors and the closed study door make the family the one law that never lapses.",
                ["Don Vito", "the wedding favors"],
            ),
            AX: (
                "annihilating betrayal",
                "The ambush at the toll booth and the brother-in-law's setup dissolve every bond the family claims.",
                ["the attempt on Vito", "Tessio's betrayal"],
            ),
            NX: (
                "legitimate aspiration",
                "Kay's world and the five-year promise negate the clan's closed loyalty without betraying it.",
                ["Kay Adams", "the promise of legitimacy"],
            ),
            NAX: (
                "ruthless order",
                "The code and the baptism's settled accounts negate betrayal by making it fatal, and so shore the family up.",
                ["the baptism settling", "the code of silence"],
            ),
        },
        "note": "the family's bond is kept by the very ruthlessness that corrodes it.",
        "summary": "Family loyalty contends with annihilating betrayal, while legitimate aspiration offers an exit never taken and ruthless order keeps the family by hollowing it; the square closes with the study door.",
    },
    {
        "title": "The Matrix",
        "author": "Lana and Lilly Wachowski",
        "medium": "film",
        "culture": "American",
        "era": "20th century",
        "terms": {
            X: (
                "awakened truth",
                "The red pill and the body unplugged trade a comfortable fiction for the desert of the real.",
                ["Neo", "the red pill"],
            ),
            AX: (
                "engineered illusion",
                "The simulated city and its agents manufacture a world precise enough to live and die in.",
                ["the Matrix", "Agent Smith"],
            ),
            NX: (
                "comfortable denial",
                "Cypher's bargain negates truth for the taste of steak; ignorance, knowingly chosen, is its own pill.",
                ["Cypher", "the steak deal"],
            ),
            NAX: (
                "guiding faith",
                "Morpheus's search and the Oracle's kitchen negate the illusion's authority and carry the awakening.",
                ["Morpheus", "the Oracle"],
            ),
        },
        "note": "the film forces a choice between a true desert and a comfortable dream.",
        "summary": "Awakened truth stands against engineered illusion, while comfortable denial re-enters the dream and guiding faith leads out of it; the square ends on a ringing payphone.",
    },
    {
        "title": "Interstellar",
        "author": "Christopher Nolan",
        "medium": "film",
        "culture": "American",
        "era": "21st century",
        "terms": {
            X: (
                "love across time",
                "The watch's ticking code and the bookshelf messages carry a promise across decades and dimensions.",
                ["Cooper and Murph", "the watch"],
            ),
            AX: (
                "entropic extinction",
                "The blight, the dust, and the closing window are a biosphere running down around its farmers.",
                ["the blight", "the dust storms"],
            ),
            NX: (
                "cold survival calculus",
                "Plan B's embryo arithmetic and Mann's lie negate love's particular claims for the species' sake.",
                ["Dr. Mann", "Plan B"],
            ),
            NAX: (
                "persevering inquiry",
                "The equation solved and the tesseract navigated negate extinction by work and give love its instrument.",
                ["Murph's equation", "TARS"],
            ),
        },
        "note": "a father's promise contends with a dying biosphere's arithmetic.",
        "summary": "Love across time answers entropic extinction, while cold calculus would save the species by abandoning its people and persevering inquiry saves both; the square resolves behind the bookshelf.",
    },
    {
        "title": "Zootopia",
        "author": "Byron Howard and Rich Moore",
        "medium": "film",
        "culture": "American",
        "era": "21st century",
        "terms": {
            X: (
                "inclusive trust",
                "The mammal metropolis premise and the fox-and-rabbit partnership bet the city on trust across old lines.",
                ["Judy and Nick's partnership", "the ZPD oath"],
            ),
            AX: (
                "engineered fear",
                "The night-howler darts and the stoked panic divide the city along its oldest seam.",
                ["Bellwether's plot", "the city in panic"],
            ),
            NX: (
                "well-meant bias",
                "The fox repellent in a good cop's bag negates trust from inside the best intentions.",
                ["the fox repellent", "the press conference"],
            ),
            NAX: (
                "reformed cynicism",
                "The hustler who crosses the line to wear the badge negates fear by example.",
                ["Nick Wilde", "the badge"],
            ),
        },
        "note": "the city's promise of trust is tested by a fear manufactured to divide it.",
        "summary": "Inclusive trust faces engineered fear, while well-meant bias betrays trust from within and reformed cynicism proves it possible; the square closes with two partners in one cruiser.",
    },
    {
        "title": "Bohemian Rhapsody",
        "author": "Bryan Singer",
        "medium": "film",
        "culture": "British",
        "era": "20th century",
        "terms": {
            X: (
                "authentic self-expression",
                "The six-minute single defended and the Live Aid set claim a voice on its own terms.",
                ["Freddie Mercury", "the Live Aid set"],
            ),
            AX: (
                "conformist erasure",
                "Label formulas and prying expectations press the singular back into the standard.",
                ["the label meeting", "the press conference questions"],
            ),
            NX: (
                "self-destructive excess",
                "The Munich years' parties negate expression by dissipating the voice they celebrate.",
                ["the Munich period", "the parties"],
            ),
            NAX: (
                "chosen family",
                "The band's friction and forgiveness and Mary's honesty negate erasure and ground the voice.",
                ["the band", "Mary Austin"],
            ),
        },
        "note": "a singular voice pushes against every pressure to make it ordinary.",
        "summary": "Authentic self-expression defies conformist erasure, while self-destructive excess wastes the voice and chosen family restores it; the square resolves in twenty minutes at Wembley.",
    },
    {
        "title": "Game of Thrones",
        "author": "David Benioff and D. B. Weiss",
        "medium": "other",
        "culture": "American",
        "era": "21st century",
        "terms": {
            X: (
                "duty to the realm",
                "The Watch's vows and the long defense of the living put service above every banner.",
                ["the Night's Watch", "the stand at Winterfell"],
            ),
            AX: (
                "devouring ambition",
                "The throne's gravity and wildfire politics consume houses, cities, and the people in between.",
                ["Cersei", "the Iron Throne"],
            ),
            NX: (
                "honor blind to politics",
                "Ned's warning delivered to his enemy negates effective duty by purity of procedure.",
                ["Ned Stark", "the warning to Cersei"],
            ),
            NAX: (
                "pragmatic counsel",
                "Tyrion's bargains and Varys's little birds negate raw ambition and keep the realm standing between catastrophes.",
                ["Tyrion", "Varys"],
            ),
        },
        "note": "the realm's survival is contested between those who serve it and those who would sit on it.",
        "summary": "Duty to the realm opposes devouring ambition, while politics-blind honor gets the dutiful killed and pragmatic counsel keeps the realm alive; the square ends with the wheel, if not broken, at least named.",
    },
    {
        "title": "The Grand Budapest Hotel",
        "author": "Wes Anderson",
        "medium": "film",
        "culture": "American",
        "era": "21st century",
        "terms": {
            X: (
                "civilized grace",
                "Gustave's cologne, verse, and unbroken courtesies keep a finishing-school of conduct open under fire.",
                ["M. Gustave", "the service rituals"],
            ),
            AX: (
                "encroaching barbarism",
                "The death squads and the requisitioned hotel march through everything courtesy maintained.",
                ["the militia checkpoints", "Jopling"],
            ),
            NX: (
                "nostalgic artifice",
                "The frame narratives and the faded lobby negate living grace by embalming it as an exhibit.",
                ["the framing devices", "the faded lobby"],
            ),
            NAX: (
                "loyal apprenticeship",
                "Zero's devotion and inheritance negate barbarism's erasures by handing grace on, person to person.",
                ["Zero", "the inherited hotel"],
            ),
        },
        "note": "a rococo courtesy holds its manners against the jackboots marching through it.",
        "summary": "Civilized grace faces encroaching barbarism, while nostalgic artifice embalms what apprenticeship keeps alive; the square survives as a story told in a fading lobby.",
    },
    {
        "title": "Blade Runner 2049",
        "author": "Denis Villeneuve",
        "medium": "film",
        "culture": "American",
        "era": "21st century",
        "terms": {
            X: (
                "authentic personhood",
                "The born child and memories that are one's own mark the line the whole world is organized to police.",
                ["the miracle child", "the wooden horse"],
            ),
            AX: (
                "manufactured servitude",
                "Baseline tests and the production line build obedient beings and call the obedience their nature.",
                ["the baseline test", "Wallace's production line"],
            ),
            NX: (
                "implanted doubt",
                "Designed memories and scripted love negate personhood without enforcing servitude; the self becomes second-hand.",
                ["the implanted memories", "Joi's scripted devotion"],
            ),
            NAX: (
                "chosen sacrifice",
                "K's unordered final act negates servitude by electing a purpose no one assigned.",
                ["K's final act", "the snowfall steps"],
            ),
        },
        "note": "the film asks whether personhood is given at birth or taken by choice.",
        "summary": "Authentic personhood stands against manufactured servitude, while implanted doubt unsettles every self and chosen sacrifice claims one; the square settles with the snow on the steps.",
    },
    {
        "title": "Les Misérables",
        "author": "Victor Hugo",
        "medium": "novel",
        "culture": "French",
        "era": "19th century",
        "terms": {
            X: (
                "merciful grace",
                "The bishop's candlesticks remake a galley slave into a man; grace spends itself without checking the ledger.",
                ["Bishop Myriel", "the candlesticks"],
            ),
            AX: (
                "implacable law",
                "The yellow passport and the relentless pursuit hold that a man is his record, forever.",
                ["Javert", "the yellow passport"],
            ),
            NX: (
                "criminal necessity",
                "Bread stolen for a sister's children negates grace while indicting the law that answers it with the galleys.",
                ["the stolen loaf", "the Thénardiers' scavenging"],
            ),
            NAX: (
                "sacrificial love",
                "Fantine's hair and teeth, Éponine at the barricade, the sewers crossed with a wounded boy: love negates the law's arithmetic by paying more than is owed.",
                ["Fantine", "the sewer rescue"],
            ),
        },
        "note": "mercy and law contend for the soul of one escaped convict and the society around him.",
        "summary": "Merciful grace overturns implacable law, while criminal necessity shows what the law refuses to see and sacrificial love enacts what grace requires; the square closes at a deathbed under the candlesticks.",
    },
    {
        "title": "Anna Karenina",
        "author": "Leo Tolstoy",
        "medium": "novel",
        "culture": "Russian",
        "era": "19th century",
        "terms": {
            X: (
                "passionate authenticity",
                "From the ballroom to the rails, Anna's love refuses to be managed, hidden, or renamed.",
                ["Anna and Vronsky", "the ball"],
            ),
            AX: (
                "social convention",
                "Karenin's position and the opera-box shunning enforce the forms that matter more than the feelings inside them.",
                ["Karenin", "the opera-box shunning"],
            ),
            NX: (
                "measured domestic devotion",
                "Levin's chalked proposal and the mowing negate passion's storm without worshiping the drawing room.",
                ["Levin and Kitty", "the mowing"],
            ),
            NAX: (
                "worldly tolerance",
                "Betsy's set, where affairs are winked at, negates convention's letter while feeding passion's possibility.",
                ["Princess Betsy's circle", "the demi-monde"],
            ),
        },
        "note": "one woman's authenticity breaks against a society that tolerates everything but honesty.",
        "summary": "Passionate authenticity collides with social convention, while measured devotion shows another way to live and worldly tolerance shows the hypocrisy that dooms Anna's; the square closes on the platform.",
    },
    {
        "title": "Moby-Dick",
        "author": "Herman Melville",
        "medium": "novel",
        "culture": "American",
        "era": "19th century",
        "terms": {
            X: (
                "monomaniacal quest",
                "The doubloon nailed to the mast and the quadrant smashed bend an entire ship to a single fixed purpose.",
                ["Ahab", "the doubloon"],
            ),
            AX: (
                "inscrutable nature",
                "The whiteness of the whale and the uncharted deep answer the quest with blankness.",
                ["the white whale", "the whiteness chapter"],
            ),
            NX: (
                "contemplative doubt",
                "Ishmael's musings and cetology's hedges negate the quest's certainty while sailing inside it.",
                ["Ishmael", "the masthead reveries"],
            ),
            NAX: (
                "disciplined seamanship",
                "Starbuck's duty and the crew's craft negate the sea's chaos and carry the quest they fear.",
                ["Starbuck", "the try-works watch"],
            ),
        },
        "note": "a captain's fixed purpose hurls itself at a nature that answers nothing.",
        "summary": "The monomaniacal quest sets itself against inscrutable nature, while contemplative doubt questions the chase and disciplined seamanship sustains it; the square sinks with the ship and one survivor.",
    },
    {
        "title": "Nineteen Eighty-Four",
        "author": "George Orwell",
        "medium": "novel",
        "culture": "British",
        "era": "20th century",
        "terms": {
            X: (
                "private truth and memory",
                "The diary, the arithmetic of two and two, and the glass paperweight hold one mind's grip on fact.",
                ["Winston's diary", "the glass paperweight"],
            ),
            AX: (
                "totalitarian control",
                "The telescreens, the Ministry of Truth, and Room 101 manufacture reality and punish remembering.",
                ["Big Brother", "Room 101"],
            ),
            NX: (
                "bodily hedonism",
                "Julia's rebellion of appetite negates the regime's asceticism yet negates memory's discipline too.",
                ["Julia", "the room above the shop"],
            ),
            NAX: (
                "documentary fidelity",
                "The photograph briefly held and the old man questioned negate the rewriting and supply truth its evidence.",
                ["the Jones-Aaronson photograph", "the antique shop"],
            ),
        },
        "note": "one mind's grip on fact is besieged by a state that manufactures reality.",
        "summary": "Private truth stands against totalitarian control, while bodily hedonism rebels without remembering and documentary fidelity remembers without power; the square is crushed in Room 101, which is the point.",
    },
    {
        "title": "The Stranger",
        "author": "Albert Camus",
        "medium": "novel",
        "culture": "French-Algerian",
        "era": "20th century",
        "terms": {
            X: (
                "lucid indifference",
                "The unwept funeral and the honest answers on the stand refuse every consoling performance.",
                ["Meursault", "the funeral vigil"],
            ),
            AX: (
                "sanctimonious judgment",
                "The trial tries a soul rather than a deed, and the chaplain insists on the comfort his prisoner declines.",
                ["the prosecutor", "the chaplain"],
            ),
            NX: (
                "performed feeling",
                "The grief the court expects and the condolences by formula negate lucidity with theater.",
                ["the expected mourning", "the courtroom theater"],
            ),
            NAX: (
                "sensuous presence",
                "The sea, Marie's salt skin, and the Algiers evenings negate judgment's abstractions and ground the lucid life.",
                ["the swims with Marie", "the Algiers evenings"],
            ),
        },
        "note": "a man who refuses to perform feeling is condemned by a society that demands the performance.",
        "summary": "Lucid indifference faces sanctimonious judgment, while performed feeling is the currency the hero refuses and sensuous presence is the life he actually has; the square opens onto the benign indifference of the world.",
    },
]


def template_relations(labels: dict[str, str], note: str) -> list[str]:
    """Relation prose for generated entries, in canonical order."""
    x, ax, nx, nax = labels[X], labels[AX], labels[NX], labels[NAX]
    return [
        f"The core opposition sets {x} against {ax}: {note}",
        f"Within the square, {nx} negates {x} without asserting {ax}; it is the reading's internal counterweight.",
        f"In turn, {nax} stands as the direct negation of {ax}, refusing it without simply restating {x}.",
        f"By implication, {nax} works in support of {x}, supplying the ground on which it stands.",
        f"Likewise, {nx} leans toward {ax}, lending it force whenever {x} falters.",
        f"Beneath the main axis, {nx} and {nax} form the secondary opposition that keeps the square in motion.",
    ]


def build_entry(data: dict, kind: ProvenanceKind, source: str) -> WorkAnalysis:
    terms = tuple(
        Term(
            role=role,
            label=data["terms"][role.value][0],
            gloss=data["terms"][role.value][1],
            exemplars=tuple(data["terms"][role.value][2]),
        )
        for role in ROLE_ORDER
    )
    if "relations" in data:
        explanations = data["relations"]
    else:
        labels = {role.value: data["terms"][role.value][0] for role in ROLE_ORDER}
        explanations = template_relations(labels, data["note"])
    relations = tuple(
        Relation(kind=kind_, endpoints=pair, explanation=explanation)
        for (kind_, pair), explanation in zip(canonical_relation_set(), explanations)
    )
    square = SemioticSquare(terms=terms, relations=relations, summary=data["summary"])
    violations = validate_square(square)
    if violations:
        raise SystemExit(f"{data['title']}: " + "; ".join(str(v) for v in violations))
    meta = WorkMeta(
        title=data["title"],
        author=data["author"],
        medium=Medium(data["medium"]),
        culture=data["culture"],
        era=data["era"],
    )
    return WorkAnalysis(
        meta=meta, provenance=Provenance(kind=kind, source=source), square=square
    )


def build() -> list[WorkAnalysis]:
    corpus = [
        build_entry(data, ProvenanceKind.EXPERT, data["source"])
        for data in EXPERT_WORKS
    ]
    for index, data in enumerate(GENERATED_WORKS):
        source = data.get("model", _MODEL_ROTATION[index % len(_MODEL_ROTATION)])
        corpus.append(build_entry(data, ProvenanceKind.GENERATED, source))
    return corpus


def main() -> int:
    corpus = build()
    text = dump_corpus(corpus)
    reloaded = load_corpus(text)  # round-trip check before writing
    assert len(reloaded) == len(corpus)
    out = ROOT / "data" / "corpus.json"
    out.write_text(text, encoding="utf-8")
    experts = sum(1 for a in corpus if a.provenance.kind is ProvenanceKind.EXPERT)
    print(f"wrote {out} ({len(corpus)} entries: {experts} expert, {len(corpus) - experts} generated)")
    return 0


if __name__ == "__main__":
    sys.exit(main())

