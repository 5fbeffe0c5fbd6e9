#ifndef EVEX_LEXICON_DATA_HPP_
#define EVEX_LEXICON_DATA_HPP_

// Bundled English tag lexicon. One tag per line followed by lowercase
// words; the first tag listed for a word wins. VERB entries are base forms
// and double as the lemmatizer's known-stem list.

namespace evex::data {

inline constexpr const char* kLexicon = R"LEX(
DET the a an this that these those each every either neither some any no all both another such what which whose
DET my your his her its our their much many few several enough various certain
PRON i me you he him she it we us they them myself yourself himself herself itself ourselves yourselves themselves
PRON who whom someone somebody anyone anybody everyone everybody nobody something anything everything nothing
PRON mine yours hers ours theirs whoever whatever whichever
ADP of in on at by for with from to into onto upon about above across after against along among amongst around as
ADP before behind below beneath beside besides between beyond despite down during except inside like near off out
ADP outside over past per since through throughout till toward towards under underneath unlike until up via within
ADP without amid amidst following including regarding concerning excluding versus alongside atop aboard pending
AUX be am is are was were been being have has had having do does did will would shall should can could may might must
AUX 's 're 've 'd 'll 'm ca wo ai
OTHER and or but nor because although though while whereas if unless whether than whilst lest
NUM zero one two three four five six seven eight nine ten eleven twelve thirteen fourteen fifteen sixteen seventeen
NUM eighteen nineteen twenty thirty forty fifty sixty seventy eighty ninety hundred thousand million billion trillion dozen
ADV not n't also very really just only still already always never often sometimes usually soon later now then here there
ADV today yesterday tomorrow tonight recently currently previously formerly again ago almost even ever far further
ADV however instead meanwhile moreover nevertheless perhaps quite rather so too yet well back away together otherwise
ADV therefore thus hence once twice finally eventually immediately effectively officially jointly respectively
ADV subsequently simultaneously abroad ahead alone anyway anywhere apart aside else elsewhere everywhere forth forward
ADV furthermore hereby indeed likewise maybe nearly nonetheless nowhere overseas somehow somewhat somewhere soon
ADV thereafter thereby upstairs downstairs whenever wherever why how when where afterwards beforehand altogether
ADV earlier less least more most no longer shortly slightly mostly partly largely fully newly highly widely
ADJ new old former previous current senior junior chief general deputy managing financial interim acting
ADJ outgoing incoming future present past last next first second third fourth fifth final main major minor key
ADJ good bad great big small large little long short high low early late young recent local national international
ADJ global regional public private federal central foreign domestic economic political social legal commercial
ADJ technical digital independent joint sole full whole other same different similar own able available
ADJ responsible important possible likely unlikely necessary free strong weak hard easy clear certain sure real true
ADJ false right wrong major upper lower inner outer total annual monthly weekly daily quarterly
ADJ modest significant substantial considerable huge vast tiny massive small-scale large-scale personal professional
ADJ administrative operational strategic corporate industrial medical human natural physical mental military civil
ADJ royal official formal informal special specific particular individual common rare simple complex complete
ADJ successful effective efficient active passive positive negative open closed close far near nearby distant
ADJ happy sad glad proud angry afraid aware unaware ready busy free poor rich wealthy cheap expensive fair unfair
ADJ fine nice beautiful ugly pretty warm cold hot cool dry wet heavy light dark bright deep wide narrow thick thin
ADJ fast slow quick rapid sudden gradual immediate direct indirect primary secondary additional extra further
ADJ entire single double multiple numerous several various overall average typical standard normal regular usual
ADJ unusual strange familiar famous popular well-known leading prominent notable chief-executive non-independent
ADJ vice honorary emeritus permanent temporary provisional previous subsequent prior following upcoming
ADJ black white red blue green yellow brown grey gray orange purple pink
ADJ american british chinese french german european asian african arab arabic qatari tunisian english spanish
ADJ italian japanese indian russian canadian australian swiss dutch korean brazilian mexican turkish
NOUN company board director president chairman chairwoman chairperson officer executive manager head chief leader
NOUN founder partner member members owner shareholder investor employee staff team department division unit group
NOUN bank firm business corporation organization organisation agency authority ministry government council committee
NOUN commission institute institution university school college hospital association federation union party club
NOUN position role post office job title seat term tenure appointment resignation retirement departure succession
NOUN successor predecessor replacement change management administration leadership governance strategy plan
NOUN decision announcement statement report news press release meeting conference session vote election
NOUN year month week day time date period quarter decade century morning afternoon evening night season
NOUN january february march april june july august september october november december monday tuesday wednesday
NOUN thursday friday saturday sunday
NOUN people person man woman men women child children family friend colleague customer client consumer user
NOUN market industry sector economy trade price cost value share stock fund capital money revenue profit loss sale
NOUN sales growth rate tax budget debt deal contract agreement merger acquisition takeover offer bid project program
NOUN programme product service system network platform technology software data information research study
NOUN development production operation operations activity process result results effect impact issue problem
NOUN question answer reason cause case example fact idea point side part piece number amount level range area
NOUN region country state city town village world nation place home house building site location address street
NOUN road way door room floor wall window office headquarters hq branch subsidiary unit plant factory store shop
NOUN mall center centre port airport station line route border coast island river sea ocean lake mountain land
NOUN water air fire earth energy power oil gas fuel electricity greenhouse carbon emission emissions pollution climate
NOUN weather environment nature reduction increase decrease rise fall drop target targets goal aim purpose policy
NOUN law rule regulation right rights court judge lawyer case trial police security defense defence army force war
NOUN peace crisis conflict attack threat risk safety health care doctor nurse patient disease virus treatment drug
NOUN medicine food water drink meal restaurant hotel travel trip flight car vehicle bus train plane ship truck
NOUN phone computer internet website email message letter book paper magazine newspaper journal article story
NOUN page word name list table chart figure picture image photo video film movie music song art culture history
NOUN science education student teacher professor class course lesson degree knowledge skill experience career life
NOUN death birth age body head hand eye face heart mind voice word language english event events situation condition
NOUN state status success failure chance opportunity challenge support help advice interest attention view opinion
NOUN relation relations relationship link connection contact access control authority responsibility duty task work
NOUN job jobs career labour labor worker workers union strike pay salary wage bonus pension benefit package
NOUN investment investors portfolio asset assets property estate insurance loan credit account payment dividend
NOUN ceo cfo coo cto chief-executive secretary treasurer spokesman spokeswoman spokesperson adviser advisor consultant
NOUN analyst economist engineer scientist researcher expert specialist minister ambassador governor mayor senator
NOUN representative delegate candidate nominee vice-president vice-chairman co-founder cofounder trustee auditor
NOUN controller administrator coordinator supervisor superintendent commissioner regulator inspector
NOUN chairmanship presidency directorship premiership membership ownership partnership
NOUN end beginning start middle top bottom front back side edge line series set kind type sort form version style
NOUN thing things stuff lot bit couple pair group crowd audience public population community society generation
NOUN role roles duties capacity function basis terms effect effects wake
NOUN gain gains hike cut cuts drop decline surge jump slump boom recession inflation
NOUN man-made festival weekend holiday noon midnight
VERB appoint name nominate elect hire recruit employ promote demote transfer move assign designate install replace
VERB succeed precede resign retire quit leave depart exit join enter head lead run manage chair direct oversee
VERB supervise serve act step become remain stay continue begin start end finish stop close open launch found
VERB establish create form set build make take give get put bring send keep hold let allow enable help support
VERB say tell ask answer report announce declare state confirm deny claim suggest propose recommend decide agree
VERB approve reject accept refuse sign vote choose select pick prefer want need like love hate hope wish expect
VERB plan intend try attempt seek aim offer provide supply deliver sell buy purchase acquire merge invest spend pay
VERB cost earn gain lose win beat fail pass raise rise fall drop increase decrease reduce cut grow expand extend
VERB shrink fire dismiss sack oust remove replace restructure reorganize reorganise change turn shift switch convert
VERB develop improve affect influence cause lead result include contain involve require depend belong relate
VERB consider think believe know understand learn teach study read write speak talk discuss explain describe show
VERB see look watch hear listen feel seem appear sound smell taste find discover notice realize realise recognize
VERB recognise remember forget imagine wonder doubt mean matter count measure compare check test prove argue
VERB meet visit come go arrive return travel walk drive fly ride sit stand lie rest sleep wake live die kill
VERB eat drink cook play work study shop fight attack defend protect save rescue warn threaten arrest charge
VERB sue accuse convict sentence jail release free pardon ban block stop prevent avoid ignore miss catch throw
VERB hit push pull carry lift drop pick fill empty cover hide reveal share own possess owe lend borrow rent
VERB hire fire employ train prepare organize organise arrange schedule book cancel postpone delay finish complete
VERB achieve reach exceed perform operate function handle deal trade export import produce manufacture design
VERB publish print broadcast post send receive collect gather obtain win award grant honor honour thank welcome
VERB congratulate praise criticize criticise blame complain protest demand insist urge encourage persuade convince
VERB invite call contact email phone inform notify advise instruct order command ask request apply register enroll
VERB graduate qualify certify license authorize authorise permit forbid mandate regulate govern rule control
VERB monitor track follow pursue chase search explore examine investigate inspect review assess evaluate analyze
VERB analyse calculate estimate predict forecast project expect anticipate await wait hesitate pause resume renew
VERB restore repair fix solve resolve settle negotiate discuss debate mediate cooperate collaborate partner ally
VERB compete challenge oppose resist fight struggle suffer survive recover heal improve worsen deteriorate decline
VERB collapse crash fail succeed thrive flourish prosper boost strengthen weaken shake shape mark note stress
VERB emphasize emphasise highlight underline outline summarize summarise list detail specify identify define
VERB name label title term dub refer mention cite quote credit attribute assign allocate distribute divide split
VERB separate unite combine merge integrate connect link attach bind tie fit match suit belong stretch span
VERB last take seize capture occupy invade withdraw retreat surrender escape flee migrate settle inhabit reside
VERB relocate transfer shift rotate spin roll slide slip trip jump climb swim dive float sink rise soar plunge
VERB tumble slump surge jump climb edge dip ease steady stabilize stabilise fluctuate vary differ range
VERB celebrate mourn honour remember commemorate mark observe attend host sponsor fund finance back endorse
VERB succeed undertake oversee spearhead helm chair co-chair co-found cofound headhunt poach recruit onboard
VERB offer accept decline turn vacate fill occupy hold retain keep maintain preserve sustain continue extend
VERB renew expire lapse end terminate conclude wrap
VERB cast throw hurt shut burst split spread bet bid broadcast forecast
VERB happen occur emerge arise exist stand face meet confront address tackle target focus concentrate center centre
VERB base locate situate stem originate derive date
VERB welcome greet thank apologize apologise regret admit confess acknowledge concede
VERB hang drink eat sing ring swing bring buy catch teach fight seek think
)LEX";

}  // namespace evex::data

#endif  // EVEX_LEXICON_DATA_HPP_
