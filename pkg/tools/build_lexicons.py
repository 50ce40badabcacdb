#!/usr/bin/env python3
"""Regenerate the bundled lexicon TSVs from the seed word lists below.

Run from the repo root:

    python3 tools/build_lexicons.py

The output is deterministic (value jitter comes from md5, not the RNG),
so re-running never churns the checked-in files. Seeds are hand-rated
stems grouped into intensity bands; inflections, adverbs, nominals,
social-media elongations and spelling variants are derived mechanically.
Booster and negator tokens are kept out of the valence tables so that
modifier roles never collide with sentiment-bearing entries.
"""

from __future__ import annotations

import hashlib
from pathlib import Path

OUT_DIR = Path(__file__).resolve().parent.parent / "src" / "sentiboard" / "engines" / "data"

VALENCE_TARGET = 7_500
POLARITY_TARGET = 2_900

# --------------------------------------------------------------------------
# Seed stems, grouped by part of speech and intensity band.
# Band magnitudes: strong ~3.0, moderate ~2.0, mild ~1.1 (signed, jittered).
# --------------------------------------------------------------------------

ADJ_POS_STRONG = """
amazing awesome magnificent spectacular outstanding phenomenal exceptional brilliant
fabulous fantastic incredible marvelous superb wonderful glorious sublime stunning
breathtaking extraordinary flawless perfect exquisite dazzling majestic miraculous
triumphant euphoric ecstatic exhilarating heavenly divine sensational thrilling
unbeatable masterful legendary immaculate astonishing astounding wondrous peerless
matchless supreme stellar radiant resplendent unforgettable overjoyed jubilant
""".split()

ADJ_POS_MODERATE = """
excellent great beautiful delightful impressive lovely admirable charming cheerful
delicious elegant energetic enjoyable excited exciting faithful fascinating generous
gorgeous graceful grateful happy healthy helpful honest hopeful inspiring joyful
kind memorable optimistic passionate peaceful pleasant precious proud refreshing
reliable respectful rewarding satisfying splendid strong successful talented thankful
thoughtful valuable vibrant victorious warm welcoming wise worthy blissful bright
brave calm capable comfortable confident courageous creative dedicated devoted
dynamic eager earnest effective efficient empowering encouraging engaging
enthusiastic ethical exemplary friendly fun funny genuine gifted glad good
handsome harmonious heartwarming heroic humble innovative intelligent intriguing
inviting likable lively loving loyal lucky merry mighty noble nourishing nurturing
playful polished popular positive powerful praiseworthy productive professional
promising prosperous pure relaxing remarkable resilient resourceful robust romantic
skillful sincere smart sophisticated spirited supportive sweet tender terrific
trustworthy upbeat uplifting virtuous vivid worthwhile zealous adorable affectionate
agreeable ambitious amusing appealing attractive authentic balanced beneficial
blessed bold caring classy clever compassionate considerate cozy cuddly cute
dependable desirable dreamy educational empathetic enchanting endearing enlightening
entertaining festive flattering forgiving fruitful fulfilling glamorous glowing
gracious gratifying groundbreaking gutsy honorable hospitable hygienic idyllic
illuminating imaginative influential ingenious insightful instructive invigorating
irresistible keen laudable liberating luminous luxurious magical meaningful
melodious merciful meritorious mesmerizing motivating neighborly nifty nimble
nourished obliging observant openhearted orderly organized original outgoing
patient perceptive persistent personable persuasive philanthropic photogenic
picturesque pioneering pleasurable plentiful poetic poised polite praised precise
premium prestigious pretty principled pristine privileged prized profound prompt
punctual quaint qualified quickwitted quiet radiating reassuring receptive
redeeming refined regal rejuvenating renowned reputable resounding respectable
responsive restful revitalizing rich righteous savvy scenic scrumptious seamless
secure selfless serene sharp shiny skilled sleek snazzy snug soothing spacious
sparkling spectacularly? splendorous spontaneous sporty spotless steadfast sturdy
stylish suave succulent sunny superior supple swanky tactful tasteful tasty
tenacious thriving tidy timeless tolerant top-notch tranquil transformative
trendy triumphal trusted truthful unwavering useful validating valiant versatile
vigilant vigorous visionary vivacious warmhearted welcoming? wholesome willing
winsome witty youthful zesty
""".split()

ADJ_POS_MILD = """
fine okay decent fair adequate acceptable solid stable steady usable neat nice
pleasing alright satisfactory sufficient workable affordable convenient handy
practical sensible smooth soft fresh clean clear safe simple snappy casual
approachable breezy comfy compact consistent crisp curious dandy doable durable
easy economical fitting flexible functional gentle glossy intact lightweight
manageable mellow modern modest natural painless passable peppy plain plausible
portable presentable quick reasonable relevant restored roomy slick speedy
straightforward streamlined swift thrifty timely tuned unhurt updated upgraded
viable
""".split()

ADJ_NEG_STRONG = """
horrible terrible awful atrocious abysmal appalling disastrous dreadful catastrophic
horrific horrendous hideous monstrous vile despicable disgusting repulsive revolting
sickening unbearable excruciating nightmarish devastating traumatic evil heinous
abhorrent loathsome wretched unforgivable diabolical barbaric gruesome ghastly
grotesque ruinous savage murderous poisonous malignant depraved contemptible
insufferable intolerable cataclysmic apocalyptic damnable godawful
""".split()

ADJ_NEG_MODERATE = """
bad nasty ugly angry annoying arrogant boring broken careless corrupt cruel
dangerous deceitful defective depressing dirty disappointing dishonest dismal
disturbing dreary dull embarrassing envious faulty fearful filthy foolish
fraudulent frightening frustrating furious greedy grim gross harmful harsh hateful
heartless hopeless hostile hurtful ignorant incompetent inferior insulting
irritating jealous lazy lousy mean messy miserable offensive outrageous painful
pathetic pessimistic poor reckless ridiculous rotten rude sad scary selfish
shameful sick sloppy spiteful stressful stupid terrifying toxic tragic unfair
unhappy unpleasant unreliable upsetting useless vicious violent weak worthless
worried wrong abrasive abusive aggressive alarming aloof anxious appalled ashamed
bitter bleak bogus brutal chaotic cheerless claustrophobic clueless cold
condescending corrosive cowardly crazed creepy criminal crooked cursed cynical
deadly deafening deceptive degrading demeaning demoralizing deplorable depressive
desolate desperate destructive devious disgraceful disheartening dishonorable
disloyal dismaying disorderly disrespectful distasteful distraught distressed
dysfunctional eerie enraged erratic exhausting exploitative fake fatal flimsy
forgettable fractured frantic fretful frightful frustrated futile gloomy glum
graceless grievous grimy gruff guilty haggard hapless harrowing hazardous
heartbreaking helpless horrid humiliating hysterical idiotic ill illegitimate
immoral impatient imprudent inadequate inconsiderate inept infamous infected
infuriating insecure insensitive insidious insincere intimidating irrational
irresponsible joyless lamentable lifeless lonely lossy ludicrous malicious
manipulative melancholy menacing merciless moldy moody morbid mournful nauseating
negative nefarious nervous noxious objectionable obnoxious obscene obsolete
offended ominous oppressive overbearing overwhelming panicked paranoid pitiful
pointless prejudiced pretentious punishing regretful regrettable repugnant
resentful restless risky rocky rusty ruthless scandalous scornful screeching
seedy shabby shady shattered shoddy sinister sketchy sluggish smug sneaky sour
spooky stagnant stale? stormy stranded stressed substandard sulky suspicious
tainted tense terrified threatening tiresome torturous treacherous troubled
troubling twisted tyrannical unacceptable unappealing unbearably? uncaring
uncomfortable undesirable unethical unforgiving unfortunate unhealthy unjust
unkind unlucky unpopular unprofessional unsafe unsatisfactory unsettling
unstable untrustworthy unwanted unwelcome vengeful vulgar wasteful whiny wicked?
woeful worrisome wrathful wrecked
""".split()

ADJ_NEG_MILD = """
slow noisy odd awkward bland clumsy confusing costly crowded dim dubious flawed
fragile glitchy grumpy inconvenient lacking limited mundane overpriced pricey
questionable rough shaky stale tedious tired uneasy unsure vague weird archaic
bumpy cheesy clunky cluttered cranky cramped dated dreary? drab faded finicky
forgetful fussy gaudy iffy insipid lukewarm meager mediocre muddled murky musty
patchy pesky plainer? pokey rickety rigid scratchy scruffy shallow skimpy spotty
stiff stuffy tacky tardy underwhelming uneven unimpressive uninspired unoriginal
unremarkable untidy wobbly worn
""".split()

ADJ_POS_EXTRA = """
accomplished affable altruistic angelic astute attentive benevolent blooming
bubbly candid charismatic chivalrous committed congenial conscientious
cooperative cordial courteous cultured daring dashing debonair decisive deft
delectable dignified diligent diplomatic discerning distinguished dutiful
ebullient effervescent eloquent eminent enterprising exuberant fabled fancy
fearless fertile fervent flourishing fluent focused fond gallant gleaming
gleeful grand gregarious grounded hale hardy heartfelt hilarious honeyed
illustrious immersive impeccable incisive inclusive incorruptible
indestructible industrious infallible informative innocent intrepid intuitive
inventive jaunty jolly jovial joyous judicious juicy kindhearted knowledgeable
laidback lavish lighthearted lionhearted lovable lush magnanimous masterly
mature melodic mindful mirthful momentous moral motivated moving munificent
noteworthy open openminded opulent ornate perky placid plucky plush posh
prolific prudent punchy ravishing rejoicing resolute revered reverent rosy
rousing sagacious sage saintly satisfied savory scholarly scintillating sexy
shrewd silky sociable soulful spellbinding spiffy sprightly spry stupendous
sumptuous superlative swell tantalizing tempting thrilled tickled tiptop toasty
tremendous trim trusty unassuming unbeaten unblemished undamaged undaunted
unequaled unfailing unmatched unrivaled unscathed unselfish unspoiled
unstoppable untarnished upstanding utopian valorous vaunted venerable verdant
""".split()

ADJ_NEG_EXTRA = """
belligerent bereaved blistering bloodied blundering boorish botched bratty
brash brooding bruised bungled burdensome calamitous callous cantankerous
catty combative complicit conceited confounded contagious contemptuous
contentious counterfeit crass craven crippled crotchety crummy culpable
damaged damning dastardly defamatory defeated deficient deformed dejected
delinquent deluded demonic derelict derisive despondent detestable
detrimental devastated dire disfigured disgruntled disillusioned dismissive
disparaging displeased disposable disreputable dissatisfied distrustful
downcast downtrodden draconian dripping dastard? egregious embattled
embittered enfeebled estranged excessive exorbitant explosive fallacious
famished fateful fearsome feeble felonious fetid fickle fiendish flagrant
forlorn forsaken foul fractious fraught frivolous frosty glacial gory grating
grisly grueling guiltridden hairraising? halfbaked? hamfisted? haughty
heartbroken hellish hollow horrifying humiliated hurried? icky ignoble
ill-fated? illicit immature imperfect impolite impossible? impoverished
imprisoned inaccurate inconsistent incorrect indecent indignant inexcusable
infernal infuriated inhumane injured insolent insolvent intolerant invalid
irate irksome jaded jarring lackluster lethal livid lurid malevolent mangled
maimed miffed miserly misguided mistaken moribund nauseous neglected
nitpicky objection? obstinate odious offkey? oily ornery ostracized outdated
overdue overhyped overrated pained panicky peeved perilous perturbed petty
petulant phony pitiless poisoned pompous powerless precarious primitive
prickly quarrelsome queasy rabid rancid rattled ravaged raw? rebellious
regressive remorseful reprehensible repellent resigned rotten? rowdy rugged?
rundown ruthless? sarcastic sardonic scathing scrawny screwy seething severe
shamed shamefaced shiftless shifty shrill sickly slain slanderous slimy
snide snobbish somber sordid spoiled spurious squalid squeamish stained
stricken stubborn stunted subpar sullen swollen tattered tearful testy
thankless? threadbare timid tormented torn traitorous trashed traumatized
trembling troublesome unconvincing uncouth underhanded undermined uneasy?
unfit unflattering unfounded ungrateful uninhabitable uninspiring
unintelligible unlawful unnerving unpardonable unprepared unproductive
unqualified unresponsive unsanitary unsavory unscrupulous unsound unsightly
untenable untested? untrained? unusable unwieldy upset? vapid vindictive
volatile vulnerable warped washedout? watered? wayward wearisome weary
wimpy wounded? wrongful
""".split()

VERB_POS = """
admire adore amaze applaud appreciate approve astonish bless celebrate cherish
commend congratulate delight empower enchant encourage endorse enjoy enrich
entertain excite flourish forgive gain heal help honor hug improve inspire laugh
like love motivate nurture please praise prosper protect recommend rejoice relax
relish rescue respect reward satisfy save shine smile succeed support thank
thrive treasure trust uplift welcome win wow accomplish achieve advance affirm
aid assist awe beautify befriend benefit bond brighten captivate care charm
comfort compliment connect conquer cuddle cure dazzle dignify donate elevate
embrace energize engage enlighten enliven excel familiarize? fascinate favor
fortify foster fund giggle gladden glow grin guard guide impress inspirit?
invigorate invite kiss liberate lift mend mentor nourish pamper pardon perfect?
persevere play prevail progress promote reassure rebuild recover redeem refresh
rejuvenate renew repair restore revive salute serve share shelter soothe sparkle
strengthen stun? succeed? surprise? teach thrill tidy? transform treat triumph
unite validate value volunteer
""".split()

VERB_NEG = """
abandon abuse accuse ache annoy argue attack betray blame bore bother break bully
cheat complain condemn confuse corrupt crash criticize cry damage deceive defraud
degrade demolish deny despise destroy disappoint discourage disgust dislike
dismiss disrespect distress disturb doubt dread embarrass endanger exploit fail
fear fight frighten frustrate grieve harass harm hate humiliate hurt ignore
infuriate insult irritate kill lie lose manipulate mislead mock mourn neglect
offend oppress panic pollute provoke punish quit regret reject resent ridicule
ruin sabotage scam scare scold shame spoil steal struggle suffer sue suspect
threaten torment torture trick upset vandalize waste weep whine worry wreck agitate
alarm alienate antagonize backfire backstab bash belittle bemoan berate betray?
blackmail bleed blunder boycott capsize censor choke collapse collide con conspire
contaminate cripple crumble crush curse decay decline defame default defeat
deprive derail despair deteriorate devastate disagree disable disappear? discredit
disgrace dishearten dishonor dislocate dismantle disobey displease dispute disrupt
dissolve? distort divide dodge? dump dwindle embezzle enrage erode err evict
exaggerate? exclude explode? falsify falter fine? flop flounder forfeit forsake
fracture fumble gripe grumble harden? hinder hoard hobble impair implode imprison
incriminate infect inflame inflict injure intimidate invade jeopardize kidnap
lament languish leak? loathe loot malfunction maul menace misbehave miscalculate
misinform mismanage mistreat misuse nag obstruct oust overcharge overreact
oversleep? overthrow penalize perish pester plummet plunder pout provoke? rant
ransack rebuke recoil refuse relapse renege reprimand repulse resign? retaliate
revile rob rot sadden scorn scrap scream sever shatter shun sink slander slap
slump smear smuggle snap? sneer snub sob squabble squander stab stagnate stall
starve stress stumble suffocate sulk suppress swindle tarnish taunt terrorize
thwart traumatize trespass undermine unravel vanish? vex victimize violate wail
weaken wilt wither worsen wound
""".split()

VERB_POS_EXTRA = """
acclaim adopt? advocate amuse anchor? assure attain awaken? beam
befit? blossom boost brighten? champion charm? chuckle collaborate compliment?
console contribute crave? dazzle? dedicate defend deliver? discover? earn
ease embolden empathize enable endear enhance enthrall entrust exalt
exceed excel? facilitate felicitate finesse flatter frolic gift glorify
gratify greet harmonize hearten idolize immortalize indulge jubilate? kindle
laud lighten marvel mediate memorialize mesmerize optimize outperform
overcome overdeliver? partner? peak perk pledge polish prize
reconcile recruit? rectify redouble? reform rehabilitate reinforce relieve
relight? remedy replenish resonate respect? reunite revel revitalize
safeguard savor secure? simplify soar solve spark splurge? stabilize
streamline succor surpass sustain tailor? toast transcend upgrade uphold
venerate vouch wham? whistle? zoom?
""".split()

VERB_NEG_EXTRA = """
afflict aggravate appall assail backpedal? bait bamboozle bankrupt banish
battered? begrudge besiege bicker blight blindside bludgeon bombard breach
browbeat brutalize bungle burden capsize? castigate censure chastise cheapen
clash coerce collude compel? confiscate confound constrict contaminate?
convict crackdown? cram? cramp criminalize cripple? crucify curtail
deadlock? debase decimate decry defect? defile defy demean demonize demote
denigrate denounce deplete deplore deport depress deride desecrate desert
destabilize detain deter detest devalue diminish disavow discard discharge?
disconnect? dishearten? disinherit dismay disown disparage displace
dispossess disqualify dissent distrust downgrade downsize dupe embroil
encroach endanger? enslave entrap eradicate? escalate? exacerbate exasperate?
excoriate exhaust expel expose? extort fabricate famish? flail flee flounder?
forewarn? fray frighten? gouge grouse gut? hamper handicap harangue hassle
haunt heckle hemorrhage hoodwink humble? impede imperil implicate impose
impound incite inconvenience indict infest infringe instigate interrogate
intrude jam? jilt lambaste lash libel malign mangle mar maroon massacre
meddle misfire mishandle misjudge mislabel misplace misquote misread
misrepresent molest mutilate obliterate offload? oppose? outlaw overburden
overcook? overload overpower? overrun overshadow? overspend overwork pan
paralyze pelt persecute pillage plague poach pressure? prosecute? protest?
punch? quarantine? quash ransom ravage rebuff recant? reek relegate renounce
reproach repudiate retract? riddle? rig rupture rust scapegoat scar scathe
scoff scrapped? scuttle shackle shame? shortchange shrink? shun? sideline
skewer slight smash? smother snarl spurn squash? stain stalk stifle sting
strand subvert sully suppress? swamp tank tatter terminate? threaten?
trample transgress traumatize? trounce undercut underdeliver underestimate?
underpay undersell? undo? unhinge unsettle uproot upstage? vilify violate?
wallow wane war? wear? wither? wrangle wrong
""".split()

NOUN_POS = """
achievement advantage award beauty benefit bliss bonus breakthrough celebration
champion charity comfort compassion compliment courage delight dignity dream ease
encouragement energy enthusiasm excellence fortune freedom friend friendship fun
generosity genius gift glory grace gratitude happiness harmony health hero honor
hope hospitality humor innovation integrity joy justice kindness laughter love
loyalty luck masterpiece mercy miracle opportunity optimism paradise passion
peace pleasure pride privilege progress promise prosperity relief respect reward
romance safety salvation satisfaction smile strength success sunshine talent
treasure triumph trust truth victory warmth wealth wellness winner wisdom wonder
abundance acclaim admiration affection alliance ally amusement applause
appreciation approval aspiration asset blessing bravery brilliance buddy care
celebration? charisma cheer confidence congratulation courtesy creativity
darling dedication devotion diligence discovery empathy empowerment
enjoyment enlightenment excitement fame favorite feast festivity fidelity
flourish? fondness forgiveness gem gentleness goodness goodwill guardian
healing heart? heaven helper honesty idol improvement inspiration jackpot jewel
jubilee keepsake kindliness? landmark laurels legend liberty lifesaver magic
marvel mastery mate maturity medal melody mentor merit milestone motivation
nirvana nobility novelty nourishment oasis pal paradise? patience patriot
perfection perk perseverance pinnacle pleasure? poise praise? prize prodigy
promotion protector purity radiance rainbow rapport rapture reassurance rebirth
recognition recovery refuge relief? remedy renewal resilience resolve resource
reunion reverence riches romance? sanctuary savior serenity sincerity solace
solidarity soulmate sparkle splendor stamina star startup? strength? sweetheart
sympathy teamwork thanks thrill tribute unity uplift? valor vigor virtue vitality
vow warmth? welfare wellbeing wonderland zeal zenith
""".split()

NOUN_NEG = """
abuse accident agony anger anxiety apathy betrayal bankruptcy blame burden
casualty chaos collapse complaint conflict confusion corruption crime crisis
critic cruelty damage danger death debt deceit defeat delay denial depression
despair destruction disaster disease disgrace dishonor disorder dispute distress
doom doubt dread embarrassment enemy envy failure fear fiasco filth fraud
frustration garbage greed grief guilt harm hatred havoc hazard horror hostility
humiliation hunger ignorance illness injury injustice insult jealousy junk liar
loss loser madness menace mess misery mistake misfortune neglect nightmare
nonsense outrage pain panic penalty pity plague poison pollution poverty
prejudice problem punishment rage regret rejection risk ruin rumor scandal shame
shock sorrow stress struggle suffering tantrum terror threat tragedy trash trauma
trouble turmoil victim villain violence war waste weakness worry wound wreck
abomination addiction adversary adversity affliction aggression ailment
allegation ambush anguish animosity annoyance apocalypse argument arson assault
atrocity audacity? avalanche? backlash bandit bedlam blackmail blemish blunder
bombshell? bottleneck breakdown bribery brutality bully burnout calamity
cancer casualty? catastrophe censure clash coldness combat commotion complication
concussion condemnation conspiracy contempt controversy corrosion coverup crackdown
cringe? crook curse cynicism damnation deadlock debacle decay deception defect
deficiency deficit degradation delusion demise demolition denunciation depletion
dereliction desolation desperation deterioration detriment difficulty dilemma
disadvantage disagreement disappointment disapproval disarray disbelief
discomfort discontent discord discrimination disgust dishonesty disillusion
dismay disparity displeasure disruption dissatisfaction distrust downfall
downturn drought dysfunction epidemic eviction exhaustion exile explosion?
extortion fallout famine fatigue feud fright fury gloom glut? gossip grievance
grudge grumble? handicap hardship heartache heartbreak hex hindrance hoax
homicide hopelessness horror? hostage hysteria imbalance impasse imposition
imprisonment inability incompetence indifference indignity infection infestation
inflammation insecurity instability insufficiency interference intimidation
intolerance invasion irritation lawsuit liability limbo litigation loneliness
looting malaise malfunction malice malpractice mayhem meltdown miscalculation
mischief misconduct misconception miscue misdeed misstep mistrust mockery
monstrosity mourning murder negligence nuisance obstacle obstruction offense
onslaught oppression ordeal outage outcry overload paralysis peril pessimism
pestilence pitfall plight predicament pressure? provocation quandary quarrel
rampage recession regression remorse repression resentment retaliation revenge
riot rift robbery sabotage? scarcity scourge scrutiny? setback shortage
shortcoming slander slaughter slump smear sorrow? squalor stagnation stigma
strain strife subjugation suspicion syndrome? tension theft threat? torment?
toxin turbulence tyranny uncertainty unemployment unrest upheaval vandalism
vendetta vengeance vermin vice violation virus vulnerability warfare woe wrath
""".split()

SLANG = """
lol:2.1 lmao:2.4 lmfao:2.5 rofl:2.4 haha:1.9 hahaha:2.2 hehe:1.5 yay:2.4
woohoo:2.7 woot:2.2 hooray:2.5 bravo:2.6 congrats:2.3 thx:1.5 thanks:1.9 ty:1.4
epic:2.6 dope:2.3 lit:2.2 rad:2.2 stoked:2.4 psyched:2.3 yum:2.0 yummy:2.2
ftw:2.3 goat:2.7 slay:2.3 banger:2.2 fave:1.9 xoxo:2.1 cheers:1.8 kudos:2.2
legend:2.5 sux:-2.1 sucks:-2.2 suck:-2.0 sucked:-2.1 meh:-0.8 ugh:-1.8
yuck:-2.0 yikes:-1.4 wtf:-2.2 smh:-1.5 fml:-2.6 crap:-2.0 crappy:-2.2
shit:-2.4 shitty:-2.6 bullshit:-2.8 damn:-1.6 dammit:-1.9 fail:-2.1 noob:-1.2
lame:-1.8 cringe:-1.9 ripoff:-2.3 rekt:-1.9 salty:-1.3 troll:-1.6 spam:-1.5
blah:-0.9 boo:-1.5 eww:-2.0 gross:-2.1 gr8:2.0 luv:2.3 wow:2.2 whoa:1.3
fab:2.2 amazeballs:2.8 winning:2.4 hyped:2.1 vibes:1.4 fire:2.3 snack:1.2
king:1.9 queen:1.9 w:1.7 dub:1.7 l:-1.7 ratio:-1.2 mid:-1.1 trashy:-2.2
garbo:-2.3 dumpsterfire:-2.9 flop:-1.9 simp:-1.1 sus:-1.2 cap:-1.1 cursed:-1.8
awsome:2.6 kewl:1.8 coolio:1.9 sweeet:2.2 omfg:-1.4 wrecked:-1.9 pwned:-1.5
stan:1.6 slaps:2.2 bops:2.0 bussin:2.3 based:1.7 chill:1.5 comfy:1.7 degen:-1.3
doomer:-1.7 bleh:-1.0 zzz:-0.8 kms:-2.9 irked:-1.6 shook:-1.0 triggered:-1.5
scammy:-2.4 sketch:-1.4 janky:-1.7 buggy:-1.8 laggy:-1.6 glitchy?:-1.7
""".split()

EMOTICONS = """
:):1.9 :-):2.0 :d:2.3 :-d:2.3 ;):1.3 ;-):1.3 =):1.7 ^_^:2.1 :3:1.6 <3:2.6
:*:1.8 xd:2.2 :p:1.2 :-p:1.2 :]:1.6 =d:2.1 \\o/:2.4 (y):1.5 :(:-1.9 :-(:-2.0
=(:-1.7 :'(:-2.5 ;(:-1.9 d::-1.8 :/:-1.1 :-/:-1.1 :|:-0.6 </3:-2.4 -_-:-1.0
t_t:-2.0 >:(:-2.4 :@:-2.2 :s:-0.9 :[:-1.7 (n):-1.5 :c:-1.6 ._.:-0.8 o_o:-0.4
""".split()

NOUN_POS_EXTRA = """
accolade altruism ambition amity angel aplomb artistry balm beacon benefactor
benevolence bloom bounty calmness camaraderie candor civility clarity comradery
conviction craftsmanship credit cure decor decency delicacy eloquence
endearment epiphany equity esteem euphoria exuberance finesse flair fortitude
fragrance gallantry gaiety glee godsend grandeur gusto haven heirloom
heroism highlight hilarity homage humanity hygiene ingenuity innovation?
jubilation keenness? kinship levity liking longevity luster majesty
mastery? mirth momentum morale nectar nobleness? ovation panache paragon
pardon pep pizzazz pluck plenty praiseworthiness? prowess purpose radiant?
rejoicing? renaissance renown repose respite reverie salute? sanctity
savvy? selflessness serendipity sheen solvency soundness spice splendidness?
sportsmanship spunk stardom stewardship succor sufficiency sweetness
tactfulness? tenderness thoughtfulness tranquility treat triumphs? upside
uptick utility? valentine verve vindication virtuosity vivacity warmheartedness?
wellspring whimsy windfall wit wonderment zest
""".split()

NOUN_NEG_EXTRA = """
abandonment abrasion absurdity accusation acrimony admonition agitation
alienation altercation ambush? anarchy angst annihilation antagonism
apprehension arrogance asphyxiation atrophy attrition austerity avarice
backstab? banishment barbarity bane blasphemy blight blockade bloodshed
blowback boredom breach brokenness? brutishness? bummer cadaver cagey?
carnage chagrin charlatan chokehold clampdown collusion complicity
concession? confinement confiscation conflagration congestion connivance
contraband contradiction? corpse crackpot cruddiness? crunch? curfew
cutback deadweight dearth debris decadence defection defiance deformity
degeneration dejection demerit demolition? demotion deprivation derision
desecration desertion despot destitution detention detonation detour?
disfigurement dislocation dismissal disobedience disrepair disrepute
dissension dissonance distortion downgrade drudgery duplicity embezzlement
encumbrance enmity entrapment erosion escalation estrangement exclusion
excuse? exile? expulsion extermination extinction fallacy fatality
felony flaw foreclosure forgery fracas fragmentation freeloader frenzy
friction fugitive gaffe gangrene ghetto gimmick glitch goon gridlock
grievance? grime grudge? gunfire harangue hardball? hitch holdup hubris
impediment imposter impurity inaction incarceration incivility indictment
indigence inefficiency inequity inferno infidelity infraction injunction?
inmate insanity insolence insurgency interrogation intrusion invective
irritant jeopardy jitters knockoff lapse larceny lethargy liability?
malady malfeasance malnutrition manhunt manipulation mirage? miscarriage
misconduct? miscreant misdemeanor misfire mishap misinformation mismatch
misprint? misrule mite? mixup mobster monopoly? morass mutiny myopia
naysayer negligence? nepotism neurosis nosedive notoriety nuisance? obscenity
obsolescence onus ostracism outlaw overcharge overkill overreach oversight
paranoia parasite pariah paucity payoff? pandemonium perjury pessimist
pestilence? phobia pickpocket pileup pittance plunder pox privation
profanity propaganda pushback quagmire quicksand racket rancor ransom
rebuke recidivism redundancy refuse? relapse remnant? reprisal repression?
reprimand repudiation resentment? retreat? rout rubble ruckus ruffian
rupture rust? sacrilege sanction? scorn scoundrel scrapheap scuffle
sellout shackles sham shambles shortfall showdown? shrapnel skirmish slang?
sleaze slob slowdown smuggler snag snafu sneak spat spite splinter? squeeze?
stalemate stampede standoff? stench stooge stranglehold strangulation stray?
subterfuge suppression swindle syndicate? tailspin tampering tantrums? tariff?
tearjerker? tirade toll? tumult turncoat twit underbelly undercurrent?
underdog? undoing unease unrest? uprising? uproar vagrant vandal venom
vertigo vitriol vortex? vulture waifs? wail? wallop wastage wasteland
whiplash wildfire? wreckage wrongdoing
""".split()

NESS_EXCLUDE = {"good", "bad", "grand", "open", "fine", "fair", "mean", "plain",
                "swell", "posh", "raw", "keen"}

AGENT_EXCLUDE = {"be", "ache", "argue", "cry", "deny", "die", "lie", "sue",
                 "free", "agree", "flee", "see", "guarantee"}

# NB: no '#'-initial tokens here — the TSV format reserves '#' for comments.
MISSPELLINGS = """
gooood:2.1 goood:2.0 loooove:3.0 looove:2.9 haapy:2.2 amazin:2.6 awesum:2.5
beutiful:2.3 exelent:2.6 fantastik:2.7 wunderful:2.6 perfekt:2.8 luvly:2.2
happpy:2.4 exciting!:0 horible:-2.7 terible:-2.8 aweful:-2.9 dissapointing:-2.2
anoying:-1.9 frustating:-2.0 disgustin:-2.5 hatee:-2.7 worsst:-2.6 baad:-2.1
uglyy:-2.2 stupidd:-2.4 borring:-1.7 suckss:-2.3
""".split()

BRITISH_VARIANTS = {
    "honor": "honour", "honorable": "honourable", "favorite": "favourite",
    "favor": "favour", "color": "colour", "colorful": "colourful",
    "humor": "humour", "humorous": "humourous", "splendor": "splendour",
    "valor": "valour", "vigor": "vigour", "rigor": "rigour",
    "marvelous": "marvellous", "labor": "labour", "behavior": "behaviour",
    "savior": "saviour", "glamorous": "glamourous", "jewelry": "jewellery",
       "apologize": "apologise", "criticize": "criticise",
    "energize": "energise", "idolize": "idolise", "memorize": "memorise",
    "organized": "organised", "paralyzed": "paralysed", "realize": "realise",
    "terrorize": "terrorise", "traumatized": "traumatised",
}

BOOSTERS_UP = """
absolutely amazingly awfully completely considerably decidedly deeply enormously
entirely especially exceptionally extraordinarily extremely fabulously flipping
flippin freaking freakin fricking frickin frigging friggin fully fucking greatly
hella highly hugely incredibly insanely intensely majorly mega more most
particularly purely quite really remarkably ridiculously seriously so
substantially super thoroughly totally tremendously truly uber unbelievably
unusually utterly very wicked
""".split()

BOOSTERS_DOWN = """
almost barely hardly just kinda kindof less little marginally occasionally
partly rather scarcely slightly somewhat sorta sortof
""".split()

NEGATORS = """
aint arent cannot cant couldnt darent didnt doesnt dont hadnt hasnt havent isnt
mightnt mustnt neither never no nobody none nope nor not nothing nowhere oughtnt
shant shouldnt wasnt werent without wont wouldnt rarely seldom
""".split()

NEGATOR_CONTRACTIONS = [
    "ain't", "aren't", "can't", "couldn't", "daren't", "didn't", "doesn't",
    "don't", "hadn't", "hasn't", "haven't", "isn't", "mightn't", "mustn't",
    "oughtn't", "shan't", "shouldn't", "wasn't", "weren't", "won't", "wouldn't",
]

# Irregular forms that the mechanical rules would get wrong.
IRREGULAR_COMPARATIVES = {
    "good": ("better", "best"),
    "bad": ("worse", "worst"),
    "happy": ("happier", "happiest"),
    "angry": ("angrier", "angriest"),
    "ugly": ("uglier", "ugliest"),
    "lucky": ("luckier", "luckiest"),
    "lazy": ("lazier", "laziest"),
    "messy": ("messier", "messiest"),
    "nasty": ("nastier", "nastiest"),
    "lonely": ("lonelier", "loneliest"),
    "lovely": ("lovelier", "loveliest"),
    "friendly": ("friendlier", "friendliest"),
    "gloomy": ("gloomier", "gloomiest"),
    "grumpy": ("grumpier", "grumpiest"),
    "creepy": ("creepier", "creepiest"),
    "sad": ("sadder", "saddest"),
    "grim": ("grimmer", "grimmest"),
    "hot": ("hotter", "hottest"),
    "sweet": ("sweeter", "sweetest"),
    "kind": ("kinder", "kindest"),
    "mean": ("meaner", "meanest"),
    "nice": ("nicer", "nicest"),
    "rude": ("ruder", "rudest"),
    "brave": ("braver", "bravest"),
    "strong": ("stronger", "strongest"),
    "weak": ("weaker", "weakest"),
    "warm": ("warmer", "warmest"),
    "cold": ("colder", "coldest"),
    "bright": ("brighter", "brightest"),
    "dull": ("duller", "dullest"),
    "harsh": ("harsher", "harshest"),
    "smart": ("smarter", "smartest"),
    "dumb": ("dumber", "dumbest"),
    "fair": ("fairer", "fairest"),
    "poor": ("poorer", "poorest"),
    "rich": ("richer", "richest"),
    "safe": ("safer", "safest"),
    "calm": ("calmer", "calmest"),
    "clean": ("cleaner", "cleanest"),
    "fresh": ("fresher", "freshest"),
    "slow": ("slower", "slowest"),
    "quick": ("quicker", "quickest"),
}

IRREGULAR_VERBS = {
    "win": ("wins", "won", "winning"),
    "lose": ("loses", "lost", "losing"),
    "steal": ("steals", "stole", "stealing"),
    "break": ("breaks", "broke", "breaking"),
    "hurt": ("hurts", "hurt", "hurting"),
    "fight": ("fights", "fought", "fighting"),
    "weep": ("weeps", "wept", "weeping"),
    "lie": ("lies", "lied", "lying"),
    "forgive": ("forgives", "forgave", "forgiving"),
    "shine": ("shines", "shone", "shining"),
    "grieve": ("grieves", "grieved", "grieving"),
    "bleed": ("bleeds", "bled", "bleeding"),
    "sink": ("sinks", "sank", "sinking"),
    "quit": ("quits", "quit", "quitting"),
    "cry": ("cries", "cried", "crying"),
    "deny": ("denies", "denied", "denying"),
    "worry": ("worries", "worried", "worrying"),
    "bully": ("bullies", "bullied", "bullying"),
    "ridicule": ("ridicules", "ridiculed", "ridiculing"),
}

# Short consonant-vowel-consonant stems that double before -ed/-ing/-er.
DOUBLING = {"stab", "slap", "rob", "nag", "snub", "sob", "stun", "grin", "hug",
            "slum", "plod", "pat", "rot", "dump"}

HAND_VALENCES = {
    "good": 1.9, "great": 3.1, "bad": -2.5, "love": 3.2, "hate": -2.7,
    "best": 3.2, "worst": -3.1, "better": 1.9, "worse": -2.1,
    "happy": 2.7, "sad": -2.1, "terrible": -2.9, "awesome": 3.1,
}

HAND_POLARITIES = {"great": 0.8, "good": 0.6, "bad": -0.7, "terrible": -1.0}


def _jitter(token: str) -> float:
    """Deterministic value in [-1, 1) derived from the token itself."""
    digest = hashlib.md5(token.encode("utf-8")).digest()
    return (int.from_bytes(digest[:4], "big") / 2**31) - 1.0


def _rate(token: str, center: float, spread: float, sign: int) -> float:
    mag = center + _jitter(token) * spread
    mag = min(max(mag, 0.4), 3.9)
    return round(sign * mag, 1)


def _clean(words: list[str]) -> list[str]:
    # A trailing '?' marks a seed I was unsure about; drop those stems.
    return sorted({w for w in words if not w.endswith("?") and w})


def pluralize(noun: str) -> str:
    if noun.endswith(("s", "x", "z", "ch", "sh")):
        return noun + "es"
    if noun.endswith("y") and len(noun) > 2 and noun[-2] not in "aeiou":
        return noun[:-1] + "ies"
    return noun + "s"


def verb_forms(verb: str) -> list[str]:
    if verb in IRREGULAR_VERBS:
        return list(IRREGULAR_VERBS[verb])
    third = pluralize(verb)
    if verb.endswith("e"):
        past, gerund = verb + "d", verb[:-1] + "ing"
    elif verb.endswith("y") and verb[-2] not in "aeiou":
        past, gerund = verb[:-1] + "ied", verb + "ing"
    elif verb in DOUBLING:
        past, gerund = verb + verb[-1] + "ed", verb + verb[-1] + "ing"
    else:
        past, gerund = verb + "ed", verb + "ing"
    return [third, past, gerund]


def adverb(adj: str) -> str | None:
    if adj.endswith(("ly", "ed", "ing")) or len(adj) < 4:
        return None
    if adj.endswith("y") and adj[-2] not in "aeiou":
        return adj[:-1] + "ily"
    if adj.endswith("ic"):
        return adj + "ally"
    if adj.endswith("le") and adj[-3] not in "aeiou":
        return adj[:-1] + "y"
    if adj.endswith("ll"):
        return adj + "y"
    return adj + "ly"


def comparatives(adj: str) -> list[str]:
    if adj in IRREGULAR_COMPARATIVES:
        return list(IRREGULAR_COMPARATIVES[adj])
    if adj.endswith("y") and len(adj) <= 7 and adj[-2] not in "aeiou":
        return [adj[:-1] + "ier", adj[:-1] + "iest"]
    if adj.endswith("e") and len(adj) <= 6:
        return [adj + "r", adj + "st"]
    if len(adj) <= 5 and adj[-1] not in "aeiouy" and adj[-2] in "aeiou" and adj[-3] not in "aeiou":
        return []  # ambiguous doubling; skip rather than guess
    if len(adj) <= 6 and adj[-1] not in "aeiouwy":
        return [adj + "er", adj + "est"]
    return []


def noun_of_quality(adj: str) -> str | None:
    if adj in NESS_EXCLUDE or len(adj) > 9:
        return None
    if adj.endswith(("ble", "ous", "ic", "al", "ive", "ing", "ed", "ness", "ful")):
        return None
    if adj.endswith("y") and adj[-2] not in "aeiou":
        return adj[:-1] + "iness"
    return adj + "ness"


def agent_noun(verb: str) -> str | None:
    if verb in AGENT_EXCLUDE or len(verb) < 3 or verb.endswith("y"):
        return None
    if verb in DOUBLING:
        return verb + verb[-1] + "er"
    if verb.endswith("e"):
        return verb + "r"
    return verb + "er"


def elongate(token: str) -> list[str]:
    """Stretch the first vowel run: social-media emphasis spellings."""
    if not token.isalpha() or len(token) < 3:
        return []
    for i, ch in enumerate(token):
        if ch in "aeiou":
            run_end = i
            while run_end < len(token) and token[run_end] == ch:
                run_end += 1
            return [token[:i] + ch * (run_end - i + 2) + token[run_end:],
                    token[:i] + ch * (run_end - i + 3) + token[run_end:]]
    return []


def parse_rated(rows: list[str]) -> dict[str, float]:
    out = {}
    for row in rows:
        token, _, value = row.rpartition(":")
        if not token or token.endswith("?") or value in ("0", ""):
            continue
        out[token.lower()] = float(value)
    return out


def _finalize(rated: dict[str, tuple[float, int]], target: int) -> dict[str, float]:
    """Keep all stems and primary inflections; let secondary derivations
    (comparatives, -ness nominals, agent nouns, elongations) fill the
    remaining quota in deterministic alphabetical order."""
    core = {t: v for t, (v, tier) in rated.items() if tier <= 1}
    extras = sorted(t for t, (_, tier) in rated.items() if tier > 1)
    out = dict(core)
    for token in extras:
        if len(out) >= target:
            break
        out[token] = rated[token][0]
    return out


def build_valence() -> dict[str, float]:
    entries: dict[str, tuple[float, int]] = {}

    def add(token: str, value: float, tier: int = 0):
        token = token.lower()
        if value == 0.0:
            return
        value = max(-3.9, min(3.9, round(value, 1)))
        if token in entries and entries[token][1] <= tier:
            return
        entries[token] = (value, tier)

    adjective_bands = [
        (ADJ_POS_STRONG, 3.0, 0.5, 1), (ADJ_POS_MODERATE, 2.0, 0.5, 1),
        (ADJ_POS_EXTRA, 2.0, 0.5, 1), (ADJ_POS_MILD, 1.1, 0.4, 1),
        (ADJ_NEG_STRONG, 3.0, 0.5, -1), (ADJ_NEG_MODERATE, 2.0, 0.5, -1),
        (ADJ_NEG_EXTRA, 2.0, 0.5, -1), (ADJ_NEG_MILD, 1.1, 0.4, -1),
    ]
    for words, center, spread, sign in adjective_bands:
        for adj in _clean(words):
            base = HAND_VALENCES.get(adj, _rate(adj, center, spread, sign))
            add(adj, base)
            adv = adverb(adj)
            if adv:
                add(adv, base, tier=1)
            quality = noun_of_quality(adj)
            if quality:
                add(quality, base, tier=2)
            comps = comparatives(adj)
            if comps:
                add(comps[0], base * 1.07, tier=2)
                add(comps[1], base * 1.15, tier=2)
                if len(comps) == 3:
                    add(comps[2], base * 1.15, tier=2)

    verb_bands = [(VERB_POS, 1.8, 0.5, 1), (VERB_POS_EXTRA, 1.8, 0.5, 1),
                  (VERB_NEG, 1.9, 0.6, -1), (VERB_NEG_EXTRA, 1.9, 0.6, -1)]
    for words, center, spread, sign in verb_bands:
        for verb in _clean(words):
            base = HAND_VALENCES.get(verb, _rate(verb, center, spread, sign))
            add(verb, base)
            for form in verb_forms(verb):
                add(form, base, tier=1)
            agent = agent_noun(verb)
            if agent:
                add(agent, base, tier=2)
                add(pluralize(agent), base, tier=2)

    noun_bands = [(NOUN_POS, 1.9, 0.5, 1), (NOUN_POS_EXTRA, 1.9, 0.5, 1),
                  (NOUN_NEG, 2.0, 0.6, -1), (NOUN_NEG_EXTRA, 2.0, 0.6, -1)]
    for words, center, spread, sign in noun_bands:
        for noun in _clean(words):
            base = HAND_VALENCES.get(noun, _rate(noun, center, spread, sign))
            add(noun, base)
            add(pluralize(noun), base, tier=1)

    for table in (SLANG, EMOTICONS, MISSPELLINGS):
        for token, value in parse_rated(table).items():
            add(token, value)

    for american, british in BRITISH_VARIANTS.items():
        if american in entries:
            add(british, entries[american][0], tier=1)

    # Social-media elongation variants are the lowest-priority filler.
    stretchable = sorted(t for t, (v, tier) in entries.items()
                         if tier == 0 and t.isalpha() and abs(v) >= 1.5)
    for token in stretchable:
        for variant in elongate(token):
            add(variant, entries[token][0] * 1.05, tier=3)

    for bad_key in set(BOOSTERS_UP) | set(BOOSTERS_DOWN) | set(NEGATORS) | set(NEGATOR_CONTRACTIONS):
        entries.pop(bad_key, None)

    return _finalize(entries, VALENCE_TARGET)


def build_polarity(valence: dict[str, float]) -> dict[str, float]:
    """Adjective/adverb-flavored subset rescaled to [-1, 1]."""
    entries: dict[str, tuple[float, int]] = {}

    def add(token: str, raw: float, tier: int = 0):
        value = round(max(-1.0, min(1.0, raw / 3.6)), 1)
        token = token.lower()
        if value == 0.0 or (token in entries and entries[token][1] <= tier):
            return
        entries[token] = (value, tier)

    adjective_lists = (ADJ_POS_STRONG, ADJ_POS_MODERATE, ADJ_POS_EXTRA,
                       ADJ_POS_MILD, ADJ_NEG_STRONG, ADJ_NEG_MODERATE,
                       ADJ_NEG_EXTRA, ADJ_NEG_MILD)
    stems = []
    for words in adjective_lists:
        stems.extend(_clean(words))
    for adj in stems:
        if adj not in valence:
            continue
        base = valence[adj]
        add(adj, base)
        adv = adverb(adj)
        if adv and adv in valence:
            add(adv, base, tier=1)
        for comp in comparatives(adj):
            if comp in valence:
                add(comp, valence[comp], tier=2)

    # Participles of the verb seeds serve as predicative adjectives.
    for words in (VERB_POS, VERB_POS_EXTRA, VERB_NEG, VERB_NEG_EXTRA):
        for verb in _clean(words):
            if verb not in valence:
                continue
            for form in verb_forms(verb)[1:]:
                if form in valence:
                    add(form, valence[form], tier=2)

    for token, value in HAND_POLARITIES.items():
        entries[token] = (value, 0)

    for bad_key in set(BOOSTERS_UP) | set(BOOSTERS_DOWN) | set(NEGATORS) | set(NEGATOR_CONTRACTIONS):
        entries.pop(bad_key, None)

    return _finalize(entries, POLARITY_TARGET)


def apostrophe_variants(tokens: list[str]) -> list[str]:
    out = set(tokens)
    for tok in tokens:
        if "'" in tok:
            out.add(tok.replace("'", "\u2019"))
    return sorted(out)


def write_tsv(path: Path, entries: dict[str, float], header: str):
    lines = [f"# {header}", "# token<TAB>value, one per line; '#' starts a comment"]
    lines += [f"{token}\t{value}" for token, value in sorted(entries.items())]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def main():
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    valence = build_valence()
    polarity = build_polarity(valence)

    boosters = {b: 0.293 for b in BOOSTERS_UP}
    boosters.update({b: -0.293 for b in BOOSTERS_DOWN})
    negators = apostrophe_variants(NEGATORS + NEGATOR_CONTRACTIONS)

    overlap = (set(boosters) | set(negators)) & (set(valence) | set(polarity))
    assert not overlap, f"modifier tokens must not carry valence: {overlap}"
    assert all(-4.0 <= v <= 4.0 and v != 0 for v in valence.values())
    assert all(-1.0 <= v <= 1.0 and v != 0 for v in polarity.values())

    write_tsv(OUT_DIR / "valence.tsv", valence, "valence lexicon, range [-4, 4]")
    write_tsv(OUT_DIR / "polarity.tsv", polarity, "polarity lexicon, range [-1, 1]")
    write_tsv(OUT_DIR / "boosters.tsv", boosters, "booster/dampener increments, range [-1, 1]")
    (OUT_DIR / "negators.txt").write_text(
        "# negation tokens, one per line\n" + "\n".join(negators) + "\n", encoding="utf-8"
    )
    print(f"valence entries:  {len(valence)}")
    print(f"polarity entries: {len(polarity)}")
    print(f"boosters:         {len(boosters)}")
    print(f"negators:         {len(negators)}")


if __name__ == "__main__":
    main()
