// Decimal digits of pi following the leading 3 (100000 digits).

#include "rmm/pi_digits.hpp"

namespace rmm {
namespace {

constexpr char kPiDigits[] =
    "1415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170679"
    "8214808651328230664709384460955058223172535940812848111745028410270193852110555964462294895493038196"
    "4428810975665933446128475648233786783165271201909145648566923460348610454326648213393607260249141273"
    "7245870066063155881748815209209628292540917153643678925903600113305305488204665213841469519415116094"
    "3305727036575959195309218611738193261179310511854807446237996274956735188575272489122793818301194912"
    "9833673362440656643086021394946395224737190702179860943702770539217176293176752384674818467669405132"
    "0005681271452635608277857713427577896091736371787214684409012249534301465495853710507922796892589235"
    "4201995611212902196086403441815981362977477130996051870721134999999837297804995105973173281609631859"
    "5024459455346908302642522308253344685035261931188171010003137838752886587533208381420617177669147303"
    "5982534904287554687311595628638823537875937519577818577805321712268066130019278766111959092164201989"
    "3809525720106548586327886593615338182796823030195203530185296899577362259941389124972177528347913151"
    "5574857242454150695950829533116861727855889075098381754637464939319255060400927701671139009848824012"
    "8583616035637076601047101819429555961989467678374494482553797747268471040475346462080466842590694912"
    "9331367702898915210475216205696602405803815019351125338243003558764024749647326391419927260426992279"
    "6782354781636009341721641219924586315030286182974555706749838505494588586926995690927210797509302955"
    "3211653449872027559602364806654991198818347977535663698074265425278625518184175746728909777727938000"
    "8164706001614524919217321721477235014144197356854816136115735255213347574184946843852332390739414333"
    "4547762416862518983569485562099219222184272550254256887671790494601653466804988627232791786085784383"
    "8279679766814541009538837863609506800642251252051173929848960841284886269456042419652850222106611863"
    "0674427862203919494504712371378696095636437191728746776465757396241389086583264599581339047802759009"
    "9465764078951269468398352595709825822620522489407726719478268482601476990902640136394437455305068203"
    "4962524517493996514314298091906592509372216964615157098583874105978859597729754989301617539284681382"
    "6868386894277415599185592524595395943104997252468084598727364469584865383673622262609912460805124388"
    "4390451244136549762780797715691435997700129616089441694868555848406353422072225828488648158456028506"
    "0168427394522674676788952521385225499546667278239864565961163548862305774564980355936345681743241125"
    "1507606947945109659609402522887971089314566913686722874894056010150330861792868092087476091782493858"
    "9009714909675985261365549781893129784821682998948722658804857564014270477555132379641451523746234364"
    "5428584447952658678210511413547357395231134271661021359695362314429524849371871101457654035902799344"
    "0374200731057853906219838744780847848968332144571386875194350643021845319104848100537061468067491927"
    "8191197939952061419663428754440643745123718192179998391015919561814675142691239748940907186494231961"
    "5679452080951465502252316038819301420937621378559566389377870830390697920773467221825625996615014215"
    "0306803844773454920260541466592520149744285073251866600213243408819071048633173464965145390579626856"
    "1005508106658796998163574736384052571459102897064140110971206280439039759515677157700420337869936007"
    "2305587631763594218731251471205329281918261861258673215791984148488291644706095752706957220917567116"
    "7229109816909152801735067127485832228718352093539657251210835791513698820914442100675103346711031412"
    "6711136990865851639831501970165151168517143765761835155650884909989859982387345528331635507647918535"
    "8932261854896321329330898570642046752590709154814165498594616371802709819943099244889575712828905923"
    "2332609729971208443357326548938239119325974636673058360414281388303203824903758985243744170291327656"
    "1809377344403070746921120191302033038019762110110044929321516084244485963766983895228684783123552658"
    "2131449576857262433441893039686426243410773226978028073189154411010446823252716201052652272111660396"
    "6655730925471105578537634668206531098965269186205647693125705863566201855810072936065987648611791045"
    "3348850346113657686753249441668039626579787718556084552965412665408530614344431858676975145661406800"
    "7002378776591344017127494704205622305389945613140711270004078547332699390814546646458807972708266830"
    "6343285878569830523580893306575740679545716377525420211495576158140025012622859413021647155097925923"
    "0990796547376125517656751357517829666454779174501129961489030463994713296210734043751895735961458901"
    "9389713111790429782856475032031986915140287080859904801094121472213179476477726224142548545403321571"
    "8530614228813758504306332175182979866223717215916077166925474873898665494945011465406284336639379003"
    "9769265672146385306736096571209180763832716641627488880078692560290228472104031721186082041900042296"
    "6171196377921337575114959501566049631862947265473642523081770367515906735023507283540567040386743513"
    "6222247715891504953098444893330963408780769325993978054193414473774418426312986080998886874132604721"
    "5695162396586457302163159819319516735381297416772947867242292465436680098067692823828068996400482435"
    "4037014163149658979409243237896907069779422362508221688957383798623001593776471651228935786015881617"
    "5578297352334460428151262720373431465319777741603199066554187639792933441952154134189948544473456738"
    "3162499341913181480927777103863877343177207545654532207770921201905166096280490926360197598828161332"
    "3166636528619326686336062735676303544776280350450777235547105859548702790814356240145171806246436267"
    "9456127531813407833033625423278394497538243720583531147711992606381334677687969597030983391307710987"
    "0408591337464144282277263465947047458784778720192771528073176790770715721344473060570073349243693113"
    "8350493163128404251219256517980694113528013147013047816437885185290928545201165839341965621349143415"
    "9562586586557055269049652098580338507224264829397285847831630577775606888764462482468579260395352773"
    "4803048029005876075825104747091643961362676044925627420420832085661190625454337213153595845068772460"
    "2901618766795240616342522577195429162991930645537799140373404328752628889639958794757291746426357455"
    "2540790914513571113694109119393251910760208252026187985318877058429725916778131496990090192116971737"
    "2784768472686084900337702424291651300500516832336435038951702989392233451722013812806965011784408745"
    "1960121228599371623130171144484640903890644954440061986907548516026327505298349187407866808818338510"
    "2283345085048608250393021332197155184306354550076682829493041377655279397517546139539846833936383047"
    "4611996653858153842056853386218672523340283087112328278921250771262946322956398989893582116745627010"
    "2183564622013496715188190973038119800497340723961036854066431939509790190699639552453005450580685501"
    "9567302292191393391856803449039820595510022635353619204199474553859381023439554495977837790237421617"
    "2711172364343543947822181852862408514006660443325888569867054315470696574745855033232334210730154594"
    "0516553790686627333799585115625784322988273723198987571415957811196358330059408730681216028764962867"
    "4460477464915995054973742562690104903778198683593814657412680492564879855614537234786733039046883834"
    "3634655379498641927056387293174872332083760112302991136793862708943879936201629515413371424892830722"
    "0126901475466847653576164773794675200490757155527819653621323926406160136358155907422020203187277605"
    "2772190055614842555187925303435139844253223415762336106425063904975008656271095359194658975141310348"
    "2276930624743536325691607815478181152843667957061108615331504452127473924544945423682886061340841486"
    "3776700961207151249140430272538607648236341433462351897576645216413767969031495019108575984423919862"
    "9164219399490723623464684411739403265918404437805133389452574239950829659122850855582157250310712570"
    "1266830240292952522011872676756220415420516184163484756516999811614101002996078386909291603028840026"
    "9104140792886215078424516709087000699282120660418371806535567252532567532861291042487761825829765157"
    "9598470356222629348600341587229805349896502262917487882027342092222453398562647669149055628425039127"
    "5771028402799806636582548892648802545661017296702664076559042909945681506526530537182941270336931378"
    "5178609040708667114965583434347693385781711386455873678123014587687126603489139095620099393610310291"
    "6161528813843790990423174733639480457593149314052976347574811935670911013775172100803155902485309066"
    "9203767192203322909433467685142214477379393751703443661991040337511173547191855046449026365512816228"
    "8244625759163330391072253837421821408835086573917715096828874782656995995744906617583441375223970968"
    "3408005355984917541738188399944697486762655165827658483588453142775687900290951702835297163445621296"
    "4043523117600665101241200659755851276178583829204197484423608007193045761893234922927965019875187212"
    "7267507981255470958904556357921221033346697499235630254947802490114195212382815309114079073860251522"
    "7429958180724716259166854513331239480494707911915326734302824418604142636395480004480026704962482017"
    "9289647669758318327131425170296923488962766844032326092752496035799646925650493681836090032380929345"
    "9588970695365349406034021665443755890045632882250545255640564482465151875471196218443965825337543885"
    "6909411303150952617937800297412076651479394259029896959469955657612186561967337862362561252163208628"
    "6922210327488921865436480229678070576561514463204692790682120738837781423356282360896320806822246801"
    "2248261177185896381409183903673672220888321513755600372798394004152970028783076670944474560134556417"
    "2543709069793961225714298946715435784687886144458123145935719849225284716050492212424701412147805734"
    "5510500801908699603302763478708108175450119307141223390866393833952942578690507643100638351983438934"
    "1596131854347546495569781038293097164651438407007073604112373599843452251610507027056235266012764848"
    "3084076118301305279320542746286540360367453286510570658748822569815793678976697422057505968344086973"
    "5020141020672358502007245225632651341055924019027421624843914035998953539459094407046912091409387001"
    "2645600162374288021092764579310657922955249887275846101264836999892256959688159205600101655256375678"
    "5667227966198857827948488558343975187445455129656344348039664205579829368043522027709842942325330225"
    "7634180703947699415979159453006975214829336655566156787364005366656416547321704390352132954352916941"
    "4599041608753201868379370234888689479151071637852902345292440773659495630510074210871426134974595615"
    "1384987137570471017879573104229690666702144986374645952808243694457897723300487647652413390759204340"
    "1963403911473202338071509522201068256342747164602433544005152126693249341967397704159568375355516673"
    "0273900749729736354964533288869844061196496162773449518273695588220757355176651589855190986665393549"
    "4810688732068599075407923424023009259007017319603622547564789406475483466477604114632339056513433068"
    "4495397907090302346046147096169688688501408347040546074295869913829668246818571031887906528703665083"
    "2431974404771855678934823089431068287027228097362480939962706074726455399253994428081137369433887294"
    "0630792615959954626246297070625948455690347119729964090894180595343932512362355081349490043642785271"
    "3831591256898929519642728757394691427253436694153236100453730488198551706594121735246258954873016760"
    "0298865925786628561249665523533829428785425340483083307016537228563559152534784459818313411290019992"
    "0598135220511733658564078264849427644113763938669248031183644536985891754426473998822846218449008777"
    "6977631279572267265556259628254276531830013407092233436577916012809317940171859859993384923549564005"
    "7099558561134980252499066984233017350358044081168552653117099570899427328709258487894436460050410892"
    "2669178352587078595129834417295351953788553457374260859029081765155780390594640873506123226112009373"
    "1080485485263572282576820341605048466277504500312620080079980492548534694146977516493270950493463938"
    "2432227188515974054702148289711177792376122578873477188196825462981268685817050740272550263329044976"
    "2778944236216741191862694396506715157795867564823993917604260176338704549901761436412046921823707648"
    "8783419689686118155815873606293860381017121585527266830082383404656475880405138080163363887421637140"
    "6435495561868964112282140753302655100424104896783528588290243670904887118190909494533144218287661810"
    "3100735477054981596807720094746961343609286148494178501718077930681085469000944589952794243981392135"
    "0558642219648349151263901280383200109773868066287792397180146134324457264009737425700735921003154150"
    "8936793008169980536520276007277496745840028362405346037263416554259027601834840306811381855105979705"
    "6640075094260878857357960373245141467867036880988060971642584975951380693094494015154222219432913021"
    "7391253835591503100333032511174915696917450271494331515588540392216409722910112903552181576282328318"
    "2342548326111912800928252561902052630163911477247331485739107775874425387611746578671169414776421441"
    "1112635835538713610110232679877564102468240322648346417663698066378576813492045302240819727856471983"
    "9630878154322116691224641591177673225326433568614618654522268126887268445968442416107854016768142080"
    "8850280054143613146230821025941737562389942075713627516745731891894562835257044133543758575342698699"
    "4725470316566139919996826282472706413362221789239031760854289437339356188916512504244040089527198378"
    "7386480584726895462438823437517885201439560057104811949884239060613695734231559079670346149143447886"
    "3604103182350736502778590897578272731305048893989009923913503373250855982655867089242612429473670193"
    "9077271307068691709264625484232407485503660801360466895118400936686095463250021458529309500009071510"
    "5823626729326453738210493872499669933942468551648326113414611068026744663733437534076429402668297386"
    "5220935701626384648528514903629320199199688285171839536691345222444708045923966028171565515656661113"
    "5982311225062890585491450971575539002439315351909021071194573002438801766150352708626025378817975194"
    "7806101371500448991721002220133501310601639154158957803711779277522597874289191791552241718958536168"
    "0594741234193398420218745649256443462392531953135103311476394911995072858430658361935369329699289837"
    "9149419394060857248639688369032655643642166442576079147108699843157337496488352927693282207629472823"
    "8153740996154559879825989109371712621828302584811238901196822142945766758071865380650648702613389282"
    "2994972574530332838963818439447707794022843598834100358385423897354243956475556840952248445541392394"
    "1000162076936368467764130178196593799715574685419463348937484391297423914336593604100352343777065888"
    "6778113949861647874714079326385873862473288964564359877466763847946650407411182565837887845485814896"
    "2961273998413442726086061872455452360643153710112746809778704464094758280348769758948328241239292960"
    "5829486191966709189580898332012103184303401284951162035342801441276172858302435598300320420245120728"
    "7253558119584014918096925339507577840006746552603144616705082768277222353419110263416315714740612385"
    "0425845988419907611287258059113935689601431668283176323567325417073420817332230462987992804908514094"
    "7903688786878949305469557030726190095020764334933591060245450864536289354568629585313153371838682656"
    "1786227363716975774183023986006591481616404944965011732131389574706208847480236537103115089842799275"
    "4426853277974311395143574172219759799359685252285745263796289612691572357986620573408375766873884266"
    "4059909935050008133754324546359675048442352848747014435454195762584735642161981340734685411176688311"
    "8654489377697956651727966232671481033864391375186594673002443450054499539974237232871249483470604406"
    "3471606325830649829795510109541836235030309453097335834462839476304775645015008507578949548931393944"
    "8992161255255977014368589435858775263796255970816776438001254365023714127834679261019955852247172201"
    "7772370041780841942394872540680155603599839054898572354674564239058585021671903139526294455439131663"
    "1345308939062046784387785054239390524731362012947691874975191011472315289326772533918146607300089027"
    "7689631148109022097245207591672970078505807171863810549679731001678708506942070922329080703832634534"
    "5203802786099055690013413718236837099194951648960075504934126787643674638490206396401976668559233565"
    "4639138363185745698147196210841080961884605456039038455343729141446513474940784884423772175154334260"
    "3066988317683310011331086904219390310801437843341513709243530136776310849135161564226984750743032971"
    "6746964066653152703532546711266752246055119958183196376370761799191920357958200759560530234626775794"
    "3936307463056901080114942714100939136913810725813781357894005599500183542511841721360557275221035268"
    "0373572652792241737360575112788721819084490061780138897107708229310027976659358387589093956881485602"
    "6322439372656247277603789081445883785501970284377936240782505270487581647032458129087839523245323789"
    "6029841669225489649715606981192186584926770403956481278102179913217416305810554598801300484562997651"
    "1212415363745150056350701278159267142413421033015661653560247338078430286552572227530499988370153487"
    "9300806260180962381516136690334111138653851091936739383522934588832255088706450753947395204396807906"
    "7086806445096986548801682874343786126453815834280753061845485903798217994599681154419742536344399602"
    "9025100158882721647450068207041937615845471231834600726293395505482395571372568402322682130124767945"
    "2264482091023564775272308208106351889915269288910845557112660396503439789627825001611015323516051965"
    "5904211844949907789992007329476905868577878720982901352956613978884860509786085957017731298155314951"
    "6814671769597609942100361835591387778176984587581044662839988060061622984861693533738657877359833616"
    "1338413385368421197893890018529569196780455448285848370117096721253533875862158231013310387766827211"
    "5726949518179589754693992642197915523385766231676275475703546994148929041301863861194391962838870543"
    "6777432242768091323654494853667680000010652624854730558615989991401707698385483188750142938908995068"
    "5453076511680333732226517566220752695179144225280816517166776672793035485154204023817460892328391703"
    "2754257508676551178593950027933895920576682789677644531840404185540104351348389531201326378369283580"
    "8271937831265496174599705674507183320650345566440344904536275600112501843356073612227659492783937064"
    "7842645676338818807565612168960504161139039063960162022153684941092605387688714837989559999112099164"
    "6464411918568277004574243434021672276445589330127781586869525069499364610175685060167145354315814801"
    "0545886056455013320375864548584032402987170934809105562116715468484778039447569798042631809917564228"
    "0987399876697323769573701580806822904599212366168902596273043067931653114940176473769387351409336183"
    "3216142802149763399189835484875625298752423873077559555955465196394401821840998412489826236737714672"
    "2606163364329640633572810707887581640438148501884114318859882769449011932129682715888413386943468285"
    "9006664080631407775772570563072940049294030242049841656547973670548558044586572022763784046682337985"
    "2827105784319753541795011347273625774080213476826045022851579795797647467022840999561601569108903845"
    "8245026792659420555039587922981852648007068376504183656209455543461351341525700659748819163413595567"
    "1964965403218727160264859304903978748958906612725079482827693895352175362185079629778514618843271922"
    "3223810158744450528665238022532843891375273845892384422535472653098171578447834215822327020690287232"
    "3300538621634798850946954720047952311201504329322662827276321779088400878614802214753765781058197022"
    "2630971749507212724847947816957296142365859578209083073323356034846531873029302665964501371837542889"
    "7557971449924654038681799213893469244741985097334626793321072686870768062639919361965044099542167627"
    "8409146698569257150743157407938053239252394775574415918458215625181921552337096074833292349210345146"
    "2643744980559610330799414534778457469999212859999939961228161521931488876938802228108300198601654941"
    "6542616968586788372609587745676182507275992950893180521872924610867639958916145855058397274209809097"
    "8172932393010676638682404011130402470073508578287246271349463685318154696904669686939254725194139929"
    "1465242385776255004748529547681479546700705034799958886769501612497228204030399546327883069597624936"
    "1510102436555352230690612949388599015734661023712235478911292547696176005047974928060721268039226911"
    "0277722610254414922157650450812067717357120271802429681062037765788371669091094180744878140490755178"
    "2038565390991047759414132154328440625030180275716965082096427348414695726397884256008453121406593580"
    "9041271135920041975985136254796160632288736181367373244506079244117639975974619383584574915988097667"
    "4470930065463424234606342374746660804317012600520559284936959414340814685298150539471789004518357551"
    "5412522359059068726487863575254191128887737176637486027660634960353679470269232297186832771739323619"
    "2007774522126247518698334951510198642698878471719396649769070825217423365662725928440620430214113719"
    "9227852699846988477023238238400556555178890876613601304770984386116870523105531491625172837327286760"
    "0724817298763756981633541507460883866364069347043720668865127568826614973078865701568501691864748854"
    "1679154596507234287730699853713904300266530783987763850323818215535597323530686043010675760838908627"
    "0498418885951380910304235957824951439885901131858358406674723702971497850841458530857813391562707603"
    "5639076394731145549583226694570249413983163433237897595568085683629725386791327505554252449194358912"
    "8405045226953812179131914513500993846311774017971512283785460116035955402864405902496466930707769055"
    "4810288502080858008781157738171917417760173307385547580060560143377432990127286772530431825197579167"
    "9296996504146070664571258883469797964293162296552016879730003564630457930884032748077181155533090988"
    "7025505207680463034608658165394876951960044084820659673794731680864156456505300498816164905788311543"
    "4548505266006982309315777650037807046612647060214575057932709620478256152471459189652236083966456241"
    "0519551052235723973951288181640597859142791481654263289200428160913693777372229998332708208296995573"
    "7727375667615527113922588055201898876201141680054687365580633471603734291703907986396522961312801782"
    "6797172898229360702880690877686605932527463784053976918480820410219447197138692560841624511239806201"
    "1318454124478205011079876071715568315407886543904121087303240201068534194723047666672174986986854707"
    "6781205124736792479193150856444775379853799732234456122785843296846647513336573692387201464723679427"
    "8700425032555899268843495928761240075587569464137056251400117971331662071537154360068764773186755871"
    "4878398908107429530941060596944315847753970094398839491443235366853920994687964506653398573888786614"
    "7629443414010498889931600512076781035886116602029611936396821349607501116498327856353161451684576956"
    "8710900299976984126326650234771672865737857908574664607722834154031144152941880478254387617707904300"
    "0156698677679576090996693607559496515273634981189641304331166277471233881740603731743970540670310967"
    "6765748695358789670031925866259410510533584384656023391796749267844763708474978333655579007384191473"
    "1988627135259546251816043422537299628632674968240580602964211463864368642247248872834341704415734824"
    "8183330164056695966886676956349141632842641497453334999948000266998758881593507357815195889900539512"
    "0853510357261373640343675347141048360175464883004078464167452167371904831096767113443494819262681110"
    "7399482506073949507350316901973185211955263563258433909982249862406703107683184466072912487475403161"
    "7969941139738776589986855417031884778867592902607004321266617919223520938227878880988633599116081923"
    "5355570464634911320859189796132791319756490976000139962344455350143464268604644958624769094347048293"
    "2941404111465409239883444351591332010773944111840741076849810663472410482393582740194493566516108846"
    "3125678529776973468430306146241803585293315973458303845541033701091676776374276210213701354854450926"
    "3071901147318485749233181672072137279355679528443925481560913728128406333039373562420016045664557414"
    "5881660521666087387480472433912129558777639069690370788285277538940524607584962315743691711317613478"
    "3882719416860662572103685132156647800147675231039357860689611125996028183930954870905907386135191459"
    "1819510297327875571049729011487171897180046961697770017913919613791417162707018958469214343696762927"
    "4591099400600849835684252019155937037010110497473394938778859894174330317853487076032219829705797511"
    "9144051099423588303454635349234982688362404332726741554030161950568065418093940998202060999414021689"
    "0900708213307230896621197755306659188141191577836272927461561857103721724710095214236964830864102592"
    "8874579993223749551912219519034244523075351338068568073544649951272031744871954039761073080602699062"
    "5807602029273145525207807991418429063884437349968145827337207266391767020118300464819000241308350884"
    "6584152148991276106513741539435657211390328574918769094413702090517031487773461652879848235338297260"
    "1361109845148418238081205409961252745808810994869722161285248974255555160763716750548961730168096138"
    "0381191436114399210638005083214098760459930932485102516829446726066613815174571255975495358023998314"
    "6982203613380828499356705575524712902745397762140493182014658008021566536067765508783804304134310591"
    "8046068008345911366408348874080057412725867047922583191274157390809143831384564241509408491339180968"
    "4025116399193685322555733896695374902662092326131885589158083245557194845387562878612885900410600607"
    "3746501402627824027346962528217174941582331749239683530136178653673760642166778137739951006589528877"
    "4276626368418306801908046098498094697636673356622829151323527888061577682781595886691802389403330764"
    "4191240341202231636857786035727694154177882643523813190502808701857504704631293335375728538660588890"
    "4583111450773942935201994321971171642235005644042979892081594307167019857469273848653833436145794634"
    "1759225738985880016980147574205429958012429581054565108310462972829375841611625325625165724980784920"
    "9989799062003593650993472158296517413579849104711166079158743698654122234834188772292944633517865385"
    "6731962559852026072947674072616767145573649812105677716893484917660771705277187601199908144113058645"
    "5779105256843048114402619384023224709392498029335507318458903553971330884461741079591625117148648744"
    "6861124760542867343670904667846867027409188101424971114965781772427934707021668829561087779440504843"
    "7528443375108828264771978540006509704033021862556147332117771174413350281608840351781452541964320309"
    "5760186946490886815452856213469883554445602495566684366029221951248309106053772019802183101032704178"
    "3866544718126039719068846237085751808003532704718565949947612424811099928867915896904956394762460842"
    "4065930948621507690314987020673533848349550836366017848771060809804269247132410009464014373603265645"
    "1845667924566695510015022983307984960799498824970617236744936122622296179081431141466094123415935930"
    "9585407913908720832273354957208075716517187659944985693795623875551617575438091780528029464200447215"
    "3962807463602113294255916002570735628126387331060058910652457080244749375431841494014821199962764531"
    "0680066311838237616396631809314446712986155275982014514102756006892975024630401735148919457636078935"
    "2855505317331416457050499644389093630843874484783961684051845273288403234520247056851646571647713932"
    "3775517294795126132398229602394548579754586517458787713318138752959809412174227300352296508089177705"
    "0682592488223221549380483714547816472139768209633205083056479204820859204754998573203888763916019952"
    "4091893894557676874973085695595801065952650303626615975066222508406742889826590751063756356996821151"
    "0949669744580547288693631020367823250182323708459790111548472087618212477813266330412076216587312970"
    "8112307581598212486398072124078688781145016558251361789030708608701989758898074566439551574153631931"
    "9198107057533663373803827215279884935039748001589051942087971130805123393322190346624991716915094854"
    "1401871060354603794643379005890957721180804465743962806186717861017156740967662080295766577051291209"
    "9079443046328929473061595104309022214393718495606340561893425130572682914657832933405246350289291754"
    "7087256484260034962961165413823007731332729830500160256724014185152041890701154288579920812198449315"
    "6999059182011819733500126187728036812481995877070207532406361259313438595542547781961142935163561223"
    "4966615226147353996740515849986035529533292457523888101362023476246690558164389678630976273655047243"
    "4864307121849437348530060638764456627218666170123812771562137974614986132874411771455244470899714452"
    "2885662942440230184791205478498574521634696448973892062401943518310088283480249249085403077863875165"
    "9113028739587870981007727182718745290139728366148421428717055317965430765045343246005363614726181809"
    "6997693348626407743519992868632383508875668359509726557481543194019557685043724800102041374983187225"
    "9677387154958399718444907279141965845930083942637020875635398216962055324803212267498911402678528599"
    "6734052420310917978999057188219493913207534317079800237365909853755202389116434671855829068537118979"
    "5262623449248339249634244971465684659124891855662958932990903523923333364743520370770101084388003290"
    "7598342170185542283861617210417603011645918780539367447472059985023582891833692922337323999480437108"
    "4196594731626548257480994825099918330069765693671596893644933488647442135008407006608835972350395323"
    "4017958255703601693699098867113210979889707051728075585519126993067309925070407024556850778679069476"
    "6126298082251633136399521170984528092630375922426742575599892892783704744452189363203489415521044597"
    "2618838003006776179313813991620580627016510244588692476492468919246121253102757313908404700071435613"
    "6231699237169484813255420091453041037135453296620639210547982439212517254013231490274058589206321758"
    "9494345489068463993137570910346332714153162232805522972979538018801628590735729554162788676498274186"
    "1642187898857410716490691918511628152854867941736389066538857642291583425006736124538491606741373401"
    "7357277995634104332688356950781493137800736235418007061918026732855119194267609122103598746924117283"
    "7493126163395001239599240508454375698507957046222664619000103500490183034153545842833764378111988556"
    "3187777925372011667185395418359844383052037628194407615941068207169703022851522505731260930468984234"
    "3315273213136121658280807521263154773060442377475350595228717440266638914881717308643611138906942027"
    "9088143119448799417154042103412190847094080254023932942945493878640230512927119097513536000921971105"
    "4120966831115163287054230284700731206580326264171161659576132723515666625366727189985341998952368848"
    "3099930275741991646384142707798870887422927705389122717248632202889842512528721782603050099451082478"
    "3572905691988555467886079462805371227042466543192145281760741482403827835829719301017888345674167811"
    "3989547504483393146896307633966572267270433932167454218245570625247972199786685427989779923395790575"
    "8189062252547358220523642485078340711014498047872669199018643882293230538231855973286978092225352959"
    "1017341407334884761005564018242392192695062083183814546983923664613639891012102177095976704908305081"
    "8547041946643713122996923588953849301363565761861060622287055994233716310212784574464639897381885667"
    "4626087948201864748767272722206267646533809980196688368099415907577685263986514625333631245053640261"
    "0569605513183813174261184420189088853196356986962795036738424313011331753305329802016688817481342988"
    "6815855778103432317530647849832106297184251843855344276201282345707169885305183261796411785796088881"
    "5032960229070561447622091509473903594664691623539680920139457817589108893199211226007392814916948161"
    "5273842736264298098234063200244024495894456129167049508235812487391799648641133480324757775219708932"
    "7722623494860150466526814398770516153170266969297049283162855042128981467061953319702695072143782304"
    "7687528028735412616639170824592517001071418085480063692325946201900227808740985977192180515853214739"
    "2653251559035410209284665925299914353791825314545290598415817637058927906909896911164381187809435371"
    "5213322614436253144901274547726957393934815469163116249288735747188240715039950094467319543161938554"
    "8520766573882513963916357672315100555603726339486720820780865373494244011579966750736071115935133195"
    "9197120948964717553024531364770942094635696982226673775209945168450643623824211853534887989395673187"
    "8066061078854400055082765703055874485418057788917192078814233511386629296671796434687600770479995378"
    "8338787034871802184243734211227394025571769081960309201824018842705704609262256417837526526335832424"
    "0661253311529423457965569502506810018310900411245379015332966156970522379210325706937051090830789479"
    "9990049993953221536227484766036136776979785673865846709366795885837887956259464648913766521995882869"
    "3380183601193236857855855819555604215625088365020332202451376215820461810670519533065306060650105488"
    "7167245377942831338871631395596905832083416898476065607118347136218123246227258841990286142087284956"
    "8796393254642853430753011052857138296437099903569488852851904029560473461311382638788975517885604249"
    "9874831638280404684861893818959054203988987265069762020199554841265000539442820393012748163815853039"
    "6439925470201672759328574366661644110962566337305409219519675148328734808957477775278344221091073111"
    "3518280460363471981856555729571447476825528578633493428584231187494400032296906977583159038580393535"
    "2135886007960034209754739229673331064939560181223781285458431760556173386112673478074585067606304822"
    "9409653041118306671081893031108871728167519579675347188537229309616143204006381322465841111157758358"
    "5811350185690478153689381377184728147519983505047812977185990847076219746058874232569958288925350419"
    "3795826061621184236876851141831606831586799460165205774052942305360178031335726326705479033840125730"
    "5912339601880137825421927094767337191987287385248057421248921183470876629667207272325650565129333126"
    "0595057777275424712416483128329820723617505746738701282095755443059683955556868611883971355220844528"
    "5264008125202766555767749596962661260456524568408613923826576858338469849977872670655519185446869846"
    "9478495734622606294219624557085371272776523098955450193037732166649182578154677292005212667143463209"
    "6378918523232150189761260343736840671941930377468809992968775824410478781232662531818459604538535438"
    "3911449677531286426092521153767325886672260404252349108702695809964759580579466397341906401003636190"
    "4042033113579336542426303561457009011244800890020801478056603710154122328891465722393145076071670643"
    "5568274377439657890679726874384730763464516775621030986040927170909512808630902973850445271828927496"
    "8921210667008164858339553773591913695015316201890888748421079870689911480466927065094076204650277252"
    "8650728905328548561433160812693005693785417861096969202538865034577183176686885923681488475276498468"
    "8219497397297077371871884004143231276365048145311228509900207424092558592529261030210673681543470152"
    "5234878635164397623586041919412969769040526483234700991115424260127343802208933109668636789869497799"
    "4001260164227609260823493041180643829138347354679725399262338791582998486459271734059225620749105308"
    "5315371829116816372193951887009577881815868504645076993439409874335144316263303172477474868979182092"
    "3948083314397084067308407958935810896656477585990556376952523265361442478023082681183103773588708924"
    "0613031336477371011628214614661679404090518615260360092521947218890918107335871964142144478654899528"
    "5823439470500798303885388608310357193060027711945580219119428999227223534587075662469261776631788551"
    "4435021828702668561066500353105021631820601760921798468493686316129372795187307897263735371715025637"
    "8733579771808184878458866504335824377004147710414934927438457587107159731559439426412570270965125108"
    "1155482479394035976811881172824721582501094960966253933953809221955919181885526780621499231727631632"
    "1833989693807561685591175299845013206712939240414459386239880938124045219148483164621014738918251010"
    "9096773869066404158973610476436500068077105656718486281496371118832192445663945814491486165500495676"
    "9826903089111856879869294705135248160917432430153836847072928989828460222373014526556798986277679680"
    "9146979837826876431159883210904371561129976652153963546442086919756737000573876497843768628768179249"
    "7469438427465256316323005551304174227341646455127812784577772457520386543754282825671412885834544435"
    "1325620544642410110379554641905811686230596447695870540721419852121067343324107567675758184569906930"
    "4604752277016700568454396923404171108988899341635058515788735343081552081177207188037910404698306957"
    "8685473937656433631979786803671873079693924236321448450354776315670255390065423117920153464977929066"
    "2415083288583952905426376876689688050333172278001858850697362324038947004718976193473443084374437599"
    "2503417880797223585913424581314404984770173236169471976571535319775499716278566311904691260918259124"
    "9890367654176979903623755286526375733763526969344354400473067198868901968147428767790866979688522501"
    "6369498567302175231325292653758964151714795595387842784998664563028788319620998304945198743963690706"
    "8276265748581043911223261879405994155406327013198989570376110532360629867480377915376751158304320849"
    "8720920280929752649812569163425000522908872646925284666104665392171482080130502298052637836426959733"
    "7070539227891535105688839381132497570713310295044303467159894487868471164383280506925077662745001220"
    "0352620370946602341464899839025258883014867816219677519458316771876275720050543979441245990077115205"
    "1546199305098386982542846407255540927403132571632640792934183342147090412542533523248021932277075355"
    "5467958716383587501815933871742360615511710131235256334858203651461418700492057043720182617331947157"
    "0086757853933607862273955818579758725874410254207710547536129404746010009409544495966288148691590389"
    "9071865980563617137692227290764197755177720104276496949611056220592502420217704269622154958726453989"
    "2276976603105249808557594716310758701332088614632664125911486338812202844406941694882615295776253250"
    "1987035987067438046982194205638125583343642194923227593722128905642094308235254408411086454536940496"
    "9271494003319782861318186188811118408257865928757426384450059944229568586460481033015388911499486935"
    "4360302218109434667640000223625505736312946262960961987605642599639461386923308371962659547392346241"
    "3459779574852464783798079569319865081597767535055391899115133525229873611277918274854200868953965835"
    "9421963331502869561192012298889887006079992795411188269023078913107603617634779489432032102773359416"
    "9086500719328040171638406449878717537567811853213284082165711075495282949749362146082155832056872321"
    "8557406516109627487437509809223021160998263303391546949464449100451528092508974507489676032409076898"
    "3652940657920198315265410658136823791984090645712468948470209357761193139980246813405200394781949866"
    "2026240089021501661638135383815150377350229660746279529103840686855690701575166241929872444827194293"
    "3100485482445458071889763300323252582158128032746796200281476243182862217105435289834820827345168018"
    "6131719593324711074662228508710666117703465352839577625997744672185715816126411143271794347885990892"
    "8084866949141390977167369002777585026866465405659503948678411107901161040085727445629384254941675946"
    "0548711723594642910585090995021495879311219613590831588262068233215615308683373083817327932819698387"
    "5087083483880463884784418840031847126974543709373298362402875197920802321878744882872843727378017827"
    "0080587824107493575148899789117397461293203510814327032514090304874622629423443275712600866425083331"
    "8768865075642927160552528954492153765175149219636718104943531785838345386525565664065725136357506435"
    "3236508936790431702597878177190314867963840828810209461490079715137717099061954969640070867667102330"
    "0486726314755105372317571143223174114116806228642063889062101923552235467116621374996932693217370431"
    "0598722503945657492461697826097025335947502091383667377289443869640002811034402608471289900074680776"
    "4844088711341352503367877316797709372778682166117865344231732264637847697875144332095340001650692130"
    "5464768909850502030150448808342618452087305309731894929164253229336124315143065782640702838984098416"
    "0295030924189712097160164926561341343342229882790992178604267981245728534580133826099587717811310216"
    "7340256562744007296834066198480676615805021691833723680399027931606420436812079900316264449146190219"
    "4582296909921227885539487835383056468648816555622943156731282743908264506116289428035016613366978240"
    "5177015521962652272545585073864058529983037918035043287670380925216790757120406123759632768567484507"
    "9151147313440001832570344920909712435809447900462494313455028900680648704293534037436032625820535790"
    "1183956490893543451013429696175452495739606214902887289327925206965353863964432253883275224996059869"
    "7475988232991626354597332444516375533437749292899058117578635555562693742691094711700216541171821975"
    "0519831787137106051063795558588905568852887989084750915764639074693619881507814685262133252473837651"
    "1929901561091897779220087057933964638274906806987691681974923656242260871541761004306089043779766785"
    "1966189140414492527048088197149880154205778700652159400928977760133075684796699295543365613984773806"
    "0394368895887646054983871478968482805384701730871117761159663505039979343869339119789887109156541709"
    "1330826076474063057114110988393880954814378284745288383680794188843426662220704387228874139478010177"
    "2139228191199236540551639589347426395382482960903690028835932774585506080131798840716244656399794827"
    "5783650195514221551339281978226984278638391679715091262410548725700924070045488485692950448110738087"
    "9965474815689139353809434745569721289198271770207666136024895814681191336141212587838955773571949863"
    "1721084439890142394849665925173138817160266326193106536653504147307080441493916936326237376777709585"
    "0313255990095762731957308648042467701212327020533742667053142448208168130306397378736642483672539837"
    "4876909806021827857862165127385635132901489035098832706172589325753639939790557291751600976154590447"
    "7169226580631511102803843601737474215247608515209901615858231257159073342173657626714239047827958728"
    "1505095633092802668458937649649770232973641319060982740633531089792464242134583740901169391964250459"
    "1288134034988106354008875968200544083643865166178805576089568967275315380819420773325979172784376256"
    "6118431989102500749182908647514979400316070384554946538594602745244746681231468794344161099333890899"
    "2638411847425257044572517459325738989565185716575961481266020310797628254165590506042479114016957900"
    "3383565748692528007430256234194982864679144763227740055294609039401775363356554719310001754300475047"
    "1914489984104001586794617924161001645471655133707407395026044276953855383439755054887109978520540117"
    "5169747581344926079433689543783221172450687344231989878844128542064742809735625807066983106979935260"
    "6933921356858813912148073547284632277849080870024677763036055512323866562951788537196730346347012229"
    "3958160679250915321748903084088651606111901149844341235012464692802880599613428351188471544977127847"
    "3361766285062169778717743824362565711779450064477718370221999106695021656757644044997940765037999954"
    "8450027106659878136038023141268369057831904607927652972776940436130230517870805465115424693952651271"
    "0105292707030667302444712597393995051462840476743136373997825918454117641332790646063658415292701903"
    "0276017339474866960348694976541752429306040727005059039503148522921392575594845078867977925253931765"
    "1564161971684435243697944473559642606333910551268260615957262170366985064732812667245219890605498802"
    "8078288142979633669674412480598219214633956574572210229867759974673812606936706913408155941201611596"
    "0190237753525556300606247983261249881288192937343476862689219239777833910733106588256813777172328315"
    "3290825250927330478507249771394483338925520811756084529665905539409655685417060011798572938139982583"
    "1929367910039184409928657560599359891000296986446097471471847010153128376263114677420914557404181590"
    "8800064943237855839308530828305476076799524357391631221886057549673832243195650655460852881201902363"
    "6447127037486344217272578795034284863129449163184753475314350413920961087960577309872013524840750576"
    "3719925365047090858251393686346386336804289176710760211115982887553994012007601394703366179371539630"
    "6139863655492213741597905119083588290097656647300733879314678913181465109316761575821351424860442292"
    "4453041131606527009743300884990346754055186406773426035834096086055337473627609356588531097609942383"
    "4738222208729246449768456057956251676557408841032173134562773585605235823638953203853402484227337163"
    "9123973215995440828421666636023296545694703577184873442034227706653837387506169212768015766181095420"
    "0977083636043611105924091178895403380214265239489296864398089261146354145715351943428507213534530183"
    "1587562827573389826889852355779929572764522939156747756667605108788764845349363606827805056462281359"
    "8885879259940946446041705204470046315137975431737187756039815962647501410906658866162180038266989961"
    "9655805872086397211769952194667898570117983324406018115756580742841829106151939176300591943144346051"
    "5404771057005433900018245311773371895585760360718286050635647997900413976180895536366960316219311325"
    "0223851791672055180659263518036251214575926238369348222665895576994660491938112486609099798128571823"
    "4940066155521961122072030922776462009993152442735894887105766238946938894464950939603304543408421024"
    "6240104872332875008174917987554387938738143989423801176270083719605309438394006375611645856094312951"
    "7597713935396074322792489221267045808183313764165818269562105872892447740035947009268662659651422050"
    "6300785920024882918608397437323538490839643261470005324235406470420894992102504047267810590836440074"
    "6638002087012666420945718170294675227854007450855237772089058168391844659282941701828823301497155423"
    "5235911774818628592967605048203864343108779562892925405638946621948268711042828163893975711757786915"
    "4301650586029652174595819888786804081103284327398671986213062055598552660364050462821523061545944744"
    "8990883908199973874745296981077620148713400012253552224669540931521311533791579802697955571050850747"
    "3874750758068765376445782524432638046143042889235934852961058269382103498000405248407084403561167817"
    "1705128133788057056434506161193304244407982603779511985486945591520519600930412710072778493015550388"
    "9536033826192934379708187432094991415959339636811062755729527800425486306005452383915106899891357882"
    "0019411786535682149118528207852130125518518493711503422159542244511900207393539627400208110465530207"
    "9328672547405436527175958935007163360763216147258154076420530200453401835723382926619153083540951202"
    "2632916505442612361919705161383935732669376015691442994494374485680977569630312958871916112929468188"
    "4936338647392747601226964158848900965717086160598147204467428664208765334799858222090619802173211614"
    "2304194777549907387385679411898246609130916917722742072333676350326783405863019301932429963972044451"
    "7928812285447821195353089891012534297552472763573022628138209180743974867145359077863353016082155991"
    "1314144205091447293535022230817193663509346865858656314855575862447818620108711889760652969899269328"
    "1787055764351433820601410773292610634315253371822433852635202177354407152818981376987551575745469397"
    "2715048846979361950047772097056179391382898984532742622728864710888327017372325881824465843624958059"
    "2560338105215606206155713299156084892064340303395262263451454283678698288074251422567451806184149564"
    "6861116354049718976821542277224794740335715274368194098920501136534001238467142965518673441537416150"
    "4256325671343024765512521921803578016924032669954174608759240920700466934039651017813485783569444076"
    "0470232540755557764728450751826890418293966113310160131119077398632462778219023650660374041606724962"
    "4901374332172464540974129955705291424382080760983648234659738866913499197840131080155813439791948528"
    "3043673901248208244481412809544377389832005986490915950532285791457688496257866588599917986752055455"
    "8099004556461178755249370124553217170194282884617402736649978475508294228020232901221630102309772151"
    "5694464279098021908266898688342630716092079140851976952355534886577434252775311972474308730436195113"
    "9611908003025587838764420608504473063129927788894272918972716989057592524467966018970748296094919064"
    "8764693702750773866432391919042254290235318923377293166736086996228032557185308919284403805071030064"
    "7768478632431910002239297852553723755662136447400967605394398382357646069924652600890906241059042154"
    "5392790441152958034533450025624410100635953003959886446616959562635187806068851372346270799732723313"
    "4693971456285542615467650632465676620279245208581347717608521691340946520307673391841147504140168924"
    "1213198268815686645614853802875393311602322925556189410429953356400957864953409351152664540244187759"
    "4931693056044868642086275720117231952640502309977456764783848897346431721598062678767183800524769688"
    "4084989185086149003432403476742686245952395890358582135006450998178244636087317754378859677672919526"
    "1112138591947254514003011805034378752776644027626189410175768726804281766238606804778852428874302591"
    "4524707395054652513533945959878961977891104189029294381856720507096460626354173294464957661265195349"
    "5701860015412623962286413897796733329070567376962156498184506842263690367849555970026079867996261019"
    "0393312637685569687670292953711625280055431007864087289392257145124811357786276649024251619902774710"
    "9033593330930494838059785662884478744146984149906712376478958226329490467981208998485716357108783119"
    "1848630254501620929805829208334813638405421720056121989353669371336733392464416125223196943471206417"
    "3754912163570085736943973059797097197266666422674311177621764030686813103518991122713397240368870009"
    "9686292254646500638528862039380050477827691283560337254825579391298525150682996910775425764748832534"
    "1412132800626717094009098223529657957997803018282428490221470748111124018607613415150387569830918652"
    "7806588966823625239378452726345304204188025084423631903833183845505223679923577529291069250432614469"
    "5010986108889991465855188187358252816430252093928525807796973762084563748211443398816271003170315133"
    "4402309526351929588680690821355853680161000213740851154484912685841268695899174149133820578492800698"
    "2551957402018181056412972508360703568510553317878408290000415525118657794539633175385320921497205266"
    "0783126028196116485809868458752512999740409279768317663991465538610893758795221497173172813151793290"
    "4431121815871023518740757222100123768721944747209349312324107065080618562372526732540733324875754482"
    "9675734500193219021991199607979893733836732425761039389853492787774739805080800155447640610535222023"
    "2540944356771879456543040673589649101761077594836454082348613025471847648518957583667439979150851285"
    "8020607820554462991723202028222914886959399729974297471155371858924238493855858595407438104882624648"
    "7880533042714630119415898963287926783273224561038521970111304665871005000832851773117764897352309266"
    "6123458887310288351562644602367199664455472760831011878838915114934093934475007302585581475619088139"
    "8752357812331342279866503522725367171230756861045004548970360079569827626392344107146584895780241408"
    "1584052295369374997106655948944592462866199635563506526234053394391421112718106910522900246574236041"
    "3009369188925586578466846121567955425660541600507127664176605687427420032957716064344860620123982169"
    "8271723197826816628249938714995449137302051843669076723577400053932662622760323659751718925901801104"
    "2903842741855078948874388327030632832799630072006980122443651163940869222207453202446241211558043545"
    "4206421512158505689615735641431306888344318528085397592773443365538418834030351782294625370201578215"
    "7373265523185763554098954033236382319219892171177449469403678296185920803403867575834111518824177439"
    "1450773663840718804893582568685420116450313576333555094403192367203486510105610498727264721319865434"
    "3545040913185951314518127643731043897250700498198705217627249406521461995923214231443977654670835171"
    "4749367986186552791715824080651063799500184295938799158350171580759883784962257398512129810326379376"
    "2183224565942366853767991131401080431397323354490908249104991433258432988210339846981417157560108297"
    "0658306521134707680368069532297199059990445120908727577622535104090239288877942463048328031913271049"
    "5478599180196967835321464441189260631526618167443193550817081875477050802654025294109218264858213857"
    "5266881555841131985600221351588872103656960875150631875330029421186822218937755460272272912905042922"
    "5978771066787384000061677215463844129237119352182849982435092089180168557279815642185819119749098573"
    "0570332667646460728757430565372602768982373259745084479649545648030771598153955827779139373601717422"
    "9960273531027687194494449179397851446315973144353518504914139415573293820485421235081739125497498193"
    "0871439661513294204591938010623142177419918406018034794988769105155790555480695387854006645337598186"
    "2846419905220452803306263695626490910827627115903856995051246529996062855443838330327638599800792922"
    "8466595035512112452840875162290602620118577753137479493620554964010730013488531507354873539056029089"
    "3352640071327473262196031177343394367338575912450814933573691166454128178817145402305475066713651825"
    "8284898099512139193995633241336556777098003081910272040997148687418134667006094051021462690280449159"
    "6465453301077546954130887141653125448130611924078211886900560277818242350226961893443525476335735364"
    "8561936325441775661398170393063287216690572225974520919291726219984440964615826945638023950283712168"
    "6446561785235565164127712826918688615572716201474934052276946595712198314943381622114006936307430444"
    "1732847861017777438379770372317952554341072234455125555899986461838767649039724611679590181000350989"
    "2864120419516355110876320426761297982652942588295114127584126273279079880755975185157684126474220947"
    "9721843309352972665210015662514552994745127631550917636730259462132930190402837954246323258550301096"
    "7069227202270748634190054383026506812141421350571541750575086399076739463351462090828889349383764393"
    "9925690060406731142209331219593620298297235116325938677224147791162957278075239505625158160313335938"
    "2311500518626890530658368129988108663263271980611271548858798093487912913707498230575929091862939195"
    "0147211975860672700925477180257503377307993971345395326461952699965963856549175904583335857991020127"
    "1320458390320085387888163363768518208372788513117522776960978796214237216254521459128183179821604411"
    "1311671406914827170981015457781939202311563871950805024679725792497605772625913328559726371211201905"
    "7207714091486450740949267180358151575715140503976109638467555692989703835473141002238025834687673501"
    "2977541327953206097115450648421218593649099791776687477448188287063231551586503289816422828823274686"
    "6106592732197907162384642153489852476216789050260998045266483929542357287343977680495774091449538391"
    "5755654854590589764951985138010079580107837599457752991967005476022525520344539887125387801719607181"
    "6407812484784725791240782454436168234523957068951427226975043187363326301110305342333582160933319121"
    "8806608268341428910415173247216053355849993224548730778822905252324234861531520976938461042582849714"
    "9634753418375620030149157032796853018686315724884015266398356895636346574353217834931998255421173084"
    "6774529708583950761645822963032442432823773745051702856069806788952176819815671078163340526675953942"
    "4926280756968326107495323390536223090807081455919837355377748742029039018142937311529334644468151212"
    "9450975965343062842153194457271186149000176505581770953024688752632501197052094761594167687277844720"
    "0019278913725184162285778379228443908430118112149636642465903363419454065718354477191244662125939265"
    "6620306888520055599121235363718226922531781458792593750441448933981608657900876165024635197045828895"
    "4817937566810464746141051424988702521399368705093723054477341126413548928068410591077166778212383328"
    "1026218558775131272117934444820144042574508306394473836379390628300897330624138061458941422769474793"
    "1665717623182472168350678076487573420491557628217583972975134478990696589532548940335615613167403276"
    "4724692125057591162515296545685446334981143176702572956618447754874693784642337372389819206620485118"
    "9437886822480727935202250179654534375727416391079197295295081294292220534771730418447791567399173841"
    "8311710362524395716152714669005814700002633010452643547865903290733205468338872078735444762647925297"
    "6901709120078741837367350877133769776834963442524199499513883150748775374338494582597655609965559543"
    "1804092017849718468549737069621208852437701385375768141663272241263442398215294164537800049250726276"
    "5150789085071265997036708726692764308377229685985169122305037462744310852934305273078865283977335246"
    "0174635277032059381791253969156210636376258829375713738407544064689647831007045806134467312715911946"
    "0843593582598778283526653115106504162329532904777217408355934972375855213804830509000964667608830154"
    "0612824308740645594431853413755220166305812111033453120745086824339432159043594430312431227471385842"
    "0303901060709403152355561727679941600203939750998976293353258555756248089966918298642226775023601932"
    "5797472674257821111973470940235745722227121252685238429587427350156366009318804549333898974157149054"
    "4182559738080871565281430102670460284316819230392535297795765862414392701549740879273131051636119137"
    "5770089295648233236482982630246079758757677453771601024908046243018565241617566556001608591215345562"
    "6760219268998285537787258314514408265458348440947846317877737479465358016996077940556870119232860804"
    "1130904629350871827125934668712766694873899824598527786499569165464029458935064964335809824765965165"
    "1420909867552038083092032304873427034682887516040715466538346196112230137594515792526967436425319273"
    "9003603860823645076269882749761872357547676288995075211480485252795084503395857083813047693788132112"
    "3674281319487950228066320170022460331989671970649163741175854851878484012054844672588851401562725019"
    "8217190669608126277854859648183696214107217142149863619187747545096503089570994709343378569816744658"
    "2826791194061195603784539785583924076127634410576675102430755981455278616781594965706255975507430652"
    "1085301597908073343736079432866757890533483669555486803913433720156498834220893399971641479746938696"
    "9054800891930671380571715058573071488156499207140867582596028760564597824237702424698053280566327870"
    "4192676846711626687946348695046450742021937394525926266861355294062478136120620263649819999949840514"
    "3868285258956342264328707663299304891723400725471764188685351372332667877921738347541480022803392997"
    "3579361524127558295692768372312347989894462743304545667900620324205163962825884430854383072014956721"
    "0646053323853720314324211260742448584509458049408182092763914000854042202355626021856434899414543995"
    "0410980591817948882628052066441086319001688568155169229486203010738897181007709290590480749092427141"
    "0189335428184299959881696609938369616443815288772140852680887574882932587358099056707558170179491619"
    "0611400190855374488272620093668560447559655747648567400817738170330738030547697360978654385938218722"
    "0583902344443508867499866506040645874346005331827436296177862518081893144363251205107094690813586440"
    "5192295129324500788333987884293393424351263433652043858129128343452973086529097833006712617981303167"
    "9438553572629699874035957045845223085639009891317947594875212639707837594486113945196028675121056163"
    "8976008880092746115860800207803341591451797073036835196977766076373785333012024120112046988609209339"
    "0853657732223924124490515327809509558664594776344822699860748132973026309750288121035177231244650953"
    "4965369309001863776409409434983731325132186208021480992268550294845466181471555744470966953017769043"
    "4272031892770604717784527939160472281534379803539679861424370956683221491465438014593829277393396032"
    "7540480095522318166673803571839327570771420467238386246178039762923771312095807893638414479298025880"
    "6552212926209362393063731349664018661951081158347117331202580586672763999276357907806381881306915636"
    "6274125431259589936119647626101405563503399523140323113819656236327198961837254845333702062563464223"
    "9527669435683767613687119629218187545760816170530315907288287007123136663087227549186613957737305460"
    "6599743781098764980241401124214277366808275139095931340415582626678951084677611866595766016599817808"
    "9414985754976284387856100263796543178313634025135814161151902096499133548733131115022700681930135929"
    "5959716401971960536250335584799809634887180391116128135959685654788683258564378961731597620024196215"
    "5289629790481982219946226948713746244472909345647002853769495885959160678928249105441251599630078136"
    "8367490209374915732896270028656829344431342347351239298259166739503425995868970697267332582735903121"
    "2887466604514614878503461428277659916080903986525757172630818334944418201935333850712923457743755793"
    "4406217871133006310600332405399169368260374617663856575887758020122936635327026710068126182517291460"
    "8202541892885935244491070138206211553827793565296914576502048643282865557934707209634807372692141186"
    "8954673227677513356901901537236690368653891612916888878764075254934942497334271811788927599315967193"
    "5475898809792452526236365903632007085444078454479734829180208204492667063442043755532505052752283377"
    "8887040804033531923407685630109347772125639088640413101073817853338316038135280828119040832564401842"
    "0537467929926220376987180180611226244909092426419858208617511771137890516091403815750033664241560952"
    "1632819712233502316742260056794128140621721964184270578432895980288233505982820819666624903585778994"
    "0333152274817776952843681630088531769694783690580671064828083598046698841098135158654906933319522394"
    "3632879239905348109878302745001720654336990661177845543646877236318444647680691428280045510746866453"
    "9280539940910875493916609573161971503316696830992946634914279878084225722069714887558063748030886299"
    "5118473187124777291910070227588893486939456289515802965372150409603107761289831263589964893410247036"
    "0366450586872875890514068412381242473863854279082827338279733268855049358743031602747490631295723497"
    "4261122151741715313361862241091386950068883589896234927631731647834007746088665559873338211382992877"
    "6911495492184192087771606068472874673681886167507221017261103830671787856694812948785048943063086169"
    "9487987031605158841082823512741535385133658953329486294944950618685147791058046960390693726626703865"
    "1290520113781085861618888694795760741358553458515176805197333443349523012039577073962377131603024288"
    "7200537320998253008977618973129817881944671731160647231476248457551928732782825127182446807824215216"
    "4695678192940982389262849437602488522790036202193866964822156280936053731780408637272684266964219299"
    "4681921490870170753336109479138180406328738759384826953558307739576144799727000347288018278528138950"
    "3217986345216111066608839314053226944905455527867894417579202440021450780192099804461382547805858048"
    "4424164047750315360549065914300781583724301231375115622840158386442708907182848167575271238467824595"
    "3433444962201009607105137060846180118754312072549133499424761711563332140893460915656155060031738421"
    "8701570226103101916603887064661438897736318780940711527528174689576401581047016965247557740891644568"
    "6777171585005832699434016772021567677240681283665652641229824394651331973591997094032759385026695574"
    "7023181320324371642058614103360652453693916005064495306016126782264894243739716671766123104897503188"
    "5732165554988342121802846912529086101485527815277625623750456375769497734336846015607727035509629049"
    "3924870884062810679436224187047470083688426710225583024035998416459511224852726336326451140173952480"
    "8619463584078375355688562231711552094722306543709260679735100056554938122457548372854571179739361575"
    "6167641692895805257297522338558611388322171107362265816218842443178857488798109026653793426664216990"
    "9140565364322493013348679881548866286650523469972355747384248305904236771432787923164224038777643301"
    "9260019228477831383763253612102533693581262408686669973827597736568222790721583247888864236934639616"
    "4363308730139814211430306008730666164803678984091335926293402304324974926887831643602681011309570716"
    "1419128306865773235326396536773903176613613159655535849993986005651559219367599777179330197446881483"
    "7110320650369319289452140265091546518430993655349333718342529843367991593941746622390038952767381333"
    "0617747629574943868716978453767219493506590875711917720875477107189937960894774512654757501871194870"
    "7387367858902006173733210756933022163206284320656711920969505857611739616323262177089454262146098584"
    "1023781321581772760222273813349541048100307327510779994899197796388353073444345753297591426376840544"
    "2264784216063122769646967156473999043715903323906560726644116438605404838847161912109008701019130726"
    "0710441141432419767968285478855247794764818029597360494397004795960402927462992035720997619501403483"
    "1538094771460105633344699882082212058728151072918297121191787642488035467231691654185225672923442918"
    "7128163232596965413548589577133208339911288775917226115273379010341362085614577992398778325083550730"
    "1998184590259583559892605532996737704917224549353296833000022301815172265757875240588322490858212800"
    "8974790932610076257877042865600699617621217684547899644070506624171021332748679623743022915535820078"
    "0141165348065647488230615003392068983794766255036549822805329662862117930628430170492402301985719978"
    "9488368971830438051821744191476604297524372516834354112170386313794114220952958857980601529387527537"
    "9903093887168357209576071522190027937929278630363726876582268124199338480816602160372215471014300737"
    "7537792699069587121289288019052031601285861825494413353820784883465311632650407642428390870121015194"
    "2319616522684220037112304643006734420647477180213530701240988603533991526679238711017062218658835737"
    "8121093517977560442563469499978725112544085452227481091487430725986960204027594117894258128188215995"
    "2359658979181144077653354321757595255536158128001163846720319346507296807990793963714961774312119402"
    "0212975731251652537680173591015573381537720019524445436200718484756634154074423286210609976132434875"
    "4884743453966598133871746609302053507027195298394327142537115576660002578442303107342955153394506048"
    "6222764966687624079324353192992639253731076892135352572321080889819339168668278948281170472624501948"
    "4097009757609209837240900747179733407881418251958425980962417476101382526439551352593118850456362641"
    "8830033853965243599741693132289471987830842760040136807470390409723847394583489618653979059411859931"
    "0356168436869219485382055780395773881360679549900085123259442529724486666766834641402189915944565309"
    "4234406506678519484177667794704720419588220432953803263105374948831221803912796784461001397267538921"
    "9511911783658766252808369005324900459741094706877291232821430463533728351995364827432583311914445901"
    "7809607782883583730111857543659958982724531925310588115026307542571493943024453931870179923608166611"
    "3054262539958338979429716020703387678150330102801200959972522222808014235710947603519255444349299867"
    "6781789104555906301595380976187592035893734197896235893112598390259831026719330418921510968915622506"
    "9659119828323455503059081730735195503721665870288053992138576037035377105178021280129566841984140362"
    "8727256232144287543022109094727210734741349755141907370433182766261772759968888260272252471336833534"
    "5281669277959132886138176634985772893690096574956228710302436259077241221909430087175569262575806570"
    "9912016659622436080242870024547362036394841255954881727272473653467783647201918303998717627037515724"
    "6499222894679323226936191776416146187956139566995677830682903165896994307673335082349907906241002025"
    "0613405734430069574547468217569044165154063658468046369262127421107539904218871612761778701425886482"
    "5775223889184599523376292377915585744549477361295525952226578636462118377598473700347971408206994145"
    "5807190802135907322692331008317595106590191212947954086036407573587502058902087045796700070552625058"
    "1142066390745921527330940682364944159089100922029668052332526619891131184201629163107689408472356436"
    "6808182168657219688268358402785500782804043453710183651096951782335743030504852653738073531074185917"
    "7056103973950626403554422751561011072617793706347238049906669221619711942591204450846417463835899382"
    "3994651739550900085947999013602667426149429006646711506717542217703877450767356374215478290591101261"
    "9157555870238957001405117822646989944917908301795475876760168094100135837613578591356924455647764464"
    "1786671153919513576961048649224900834467154863830544779143300976804868783481846727337584368927243104"
    "4740680768527862558516509208826381323362314873333671476452045087662761495038994950480956046098960432"
    "9123358348859990294526400284994280878624039811814884767301216754161106629995553668193123287425702063"
    "7383520200868636913117334697317412191536332467453256308713473027921749562270146873258678917345583799"
    "6435135880095935087755635624881049385299900767513551352779241242927748856588856651324730251471021057"
    "5352516511814850902750476845518252096331899068527614435138213662152368890578786699432288816028377482"
    "0355060160298940091197138501798716836337441392759736440170070147637066557035043381211135764150184518"
    "2141361982349515960106475271257593518530433287553778305750956742544268471221961870917856078393614451"
    "1383335649103256405733898667178123972237519316430617013859539474367843392670986712452211189690840236"
    "3274114966012434830989299417380305884171666130730400675883804321115553794406054977217059428215148861"
    "6567277124090338772774562909711013488518437411869565544974573684521806698291104505800429988795389902"
    "7804383596282409421860556287788428802127553884803728640019441614257499904272009595204654170598104989"
    "9675045119364711727722204361026140797508096869751766002371877483480161203102346805671126447661237476"
    "2785219024120256994353471622666089367521983311181351114650385489502512065577263614547360442685949807"
    "4396932331297127377157347099713952291182653485155587137336629120242714302503763269501350911612952993"
    "7858646813072264860082708813335381937036825988678933212383270532976258573827900978264605455985551318"
    "3668884462826513379849166783940976135376625179825824966345877195012438404035914084920973375464247448"
    "8176184070023569580177410177696925077814893386672557898564589851056891960924398841569280696983352240"
    "2256345704973122452693541938370048431833571965166267215755241934019330990183193091965829209696562476"
    "6768365964701959575473934551433741370876151732367720422738567427917069820454995309591887243493952409"
    "4441678998846319845504852393662972079777452814399418256789457795712552426826089940863317371538896262"
    "8896294021121088844273765686245276121303710173007851357154045330415079594477761435974378037424366469"
    "7324713841049212431413890357909241603640631403814983148190525172093710396402680899483257229795456404"
    "2701757722904173234796073618787889913318305843069394825961318713816423467218730845133877219086975104"
    "9428437693250249816566738162606159417682525099937416728839517440669325496534031014522253161890092353"
    "7648637848288134420987004809622717122640748957193900291857330746010436072919094576799461492929042798"
    "1687729426487729952858434647775386906950148984133924540394144680263625402118614317031251117577642829"
    "9146445334089209769616990983726523617687456058947049681701369749095230720826828878907301900182534258"
    "0534342170592871393173799314241085264739094828459641809361413847583113613057610846236683723769591349"
    "2615824516221552134879244145041756848064120636520170386330129532777699023118648020067556905682295016"
    "3549319923059142463962170253297475731140942201801993680350264956369558664259067626856873721103391567"
    "9383989576556519317788300024161353956243777784080174881937309502069990089089932808839743036773659552"
    "4891300156633294077907139615464534088791510300651321934486673248275907946807879819425019582622320395"
    "1312520141099605312606965554042486705499867869230217469890095478507256729787947698888310934874644264"
    "0071818316033165551153427615562240547447337804924621495213325852769884733626918264917433898782478927"
    "8468918828054669982303689939783413747587025805716349413568433929396068192061773331791738208562436433"
    "6353598634944968907810640196740744365836670715869245211829978938040771375012908586465789057714268335"
    "8276897855471768718442772612050926648610205153564284063236848180728794071712796682006072755955590404"
    "0233178749447346454760628189541512139162918444297651066947969354016866010055196077687335396511614930"
    "9375709685545593815137895690392510149532656281470119983269922000663928753747131352364215892651262040"
    "7288771657835840521964605410543544364216656224456504299901025658692727914275293117208279393775132610"
    "6052881235373451068372939893580871243869385934389175713376300720319760816604464683937725806909237297"
    "5234867029169104263692620901996052041210240776481903160140858635584276095370865581642739953493465463"
    "1450404019952853725200495780525465625115410925243799132626271360909940290226206283675213230506518393"
    "4057450112099341464918433323646569371725914489324159006242020612885732926133596808726500045628284557"
    "5745965921205303413101118275013069615098355156320043107846019065654938065425252291619918199596027523"
    "2770224985573882489988270746593635576858256051806896428537685077201222034792099393617926820659014216"
    "5615925306737944568949070853263568196831861772268249911472615732035807646298116244013316737892788689"
    "2290325933498617970219949819257396176730758344170985592221701718257127775344915082052784309046194608"
    "3521740200583867284970941102326695392144546106621500641067474020700918991195137646690448126725369153"
    "7162290791385403937560077835153374167747942100384002308951850994548779039346122220865060160500351776"
    "2648316111533255877050735412792499098593734737870811942530551214369797499149518605359204038302357163"
    "5272763087469321962219006426088618367610334600225547747781364101269190656968649501268837629690723396"
    "1276287223041141813610060264044030035996988919945827397624114613744804059697062576764723766065541618"
    "5746905272292382282751867991569833907476711461030227766060200612468764777288190967916133540198814027"
    "5799217416767879923160396356949285151363364721954061117176738737255572852294005436178517650230754469"
    "3869307873499110352182532929726044553210797887711449898870911511237250604238753734841257086064069052"
    "0584521227545338480082053024504565176695185769132000428167580549248117805198326460324457928297301291"
    "0531838563682120621553128866856495651261389226136706409395333457052698695969235035309422454386527867"
    "7673027540402702246384483553239914751363441044050092330361271496081355490531539021002299595756583705"
    "3812619656831442860579566966221547216956208700137277685369608407048333251327931122325071486302069512"
    "4539500373572334680709465648308920980153487870563349109236605755405086411152144148143463043727327104"
    "5027768661953107858323334857840297160925215326092558932655600672124359464255065996771770388445396181"
    "6328796144608177892721718369088801267782074301064225246348074543004764928855534090621851536543554741"
    "2547615276977266776977277705831580141218568801170502836527554321480348800444297999806215790456416195"
    "7212784508928489806426497427090579129069217807298769477975112447305991406050629946894280931034216416"
    "6299356148281309988707452927160484336308184041264696379258430941854422163590845761460785585624738149"
    "3142707826621518554160387020687698046174740080832434366538235455510944949843109349475994467267366535"
    "2517662706772194183191977196378015702169933675083760057163454643671776723387588643405644871566964321"
    "0412825956453498413884128904206820470076155969168430389993483667935425492103281133631847225923055543"
    "8305820694167562999201337317548912203723034907268106853445403599356182357631283776764063101312533521"
    "2141994611869350833176587852047112364331226765129964171325217513553261867681942338790365468908001827"
    "1352835848884441117612341011799187092365071848578562210211040097769944531217950224795780695065329659"
    "4038398736990724079767904082679400761872954783596349279390457697366164340535979221928587057495748169"
    "6694062334272619733518136626063735982575552496509807260123668283605928341855848026958413772558970883"
    "7899429105498003311138846034019391661221866960584915714857335682861495000190975911252188003964197621"
    "6355937574371801148055944229873041819680808564726571354761283162920044988031540210553059707666636274"
    "9328308916880932359290081787411985738317192616728834918402429721290434965526942726402559641463525914"
    "3484006758676903503823205729341329815935330444464968294413673234421583807616948312193331198190610961"
    "4295220153617029857510559432646146850545268497576480780800922133581137819774927176854507553832876887"
    "4474591593731162470601091244609829424841287520224462594477638749491997840446829257360968534549843266"
    "5368628444893657041118177938064416165312236002149187687694673984075171763075168498563592014868929431"
    "0594020245796962292456664488196757629434953532638217161339575779076637076456957025973880043841580589"
    "4336137106551859987600754924187211714889295221737721146081154344982665479872580056674724051122007383"
    "4592715757277152185899469481179406444663994323700442911407472181802248258377360173466853007449855647"
    "1542003612359339731291445859152288740871950870863221883728826282288463184371726190330577714765156414"
    "3822306791847386039147683108141358275755853643597721650028277803713422869688787349795096031108899196"
    "1433866640684506974207877002805093672033872326296378560386532164323488155575570184690890746478791224"
    "3637555666867806761054495501726079114293083128576125448194444947324481909379536900820638463167822506"
    "4809531810406570254327604385703505922818919878065865412184299217273720955103242251079718077833042609"
    "0867942734289557355592527238055114404380012390416877164451802264916816419274011064516224311017000566"
    "9112173318942340054795968466980429801736257040673328212996215368488140410219446342464622074557564396"
    "0452985313071409084608499653767803793201899140865814662175319337665970114330608625009829566917638846"
    "0567629729314649114937046244693519840395344491351411936679333019366176636525551491749823079870722808"
    "6085962611266050428929696653565251668888557211227680277274370891738963977225756489053340103885593112"
    "5679991516589025016486961427207005916056166159702451989051832969278935550303934681219761582183980483"
    "9605625230914626384473862960398489243861872985077759287927220685548072104978176532862101874767668972"
    "4884113956034948037672703631692100735083407386526168450748249644859742813493648037242611670426687083"
    "1925040997615319076855770327421785010006441984124207396400139603601583810565928413684574119102736420"
    "2741637234882145241013477165296031284086584197879511165115298278146203791398550063999603265912485253"
    "0849369031313010079997719136223086601109992914287124938854161203802041134018888721969347790449752745"
    "4288072803509305828754420755134816660927879353566521255620139988249628478726214432362853676502591450"
    "4683776352825876521391564809721419296755493843755826002531685363567313792624758780494459441834291727"
    "5698837622626184636545274349766241113845130548144983631178978448973207671950878415861887969295581973"
    "3250699951402601511675529750575437810242238957925786562128432731202200716730574069286869363930186765"
    "9582513264991459502609170693475194089753574640168308117988464524736189560564794263580705625632811892"
    "6966302647953595109712765913623318086692153578860781275991053717140220450618607537486630635059148391"
    "6467656723205714516886170790984695932236724946737583099607042589220481550799132752088583781117685214"
    "2693347869218952406226579210436203488529262679840139532164587911515790504605797108389833718640380244"
    "1751134722647254701079479399695355466961972676325522991465493349966323418595145036098034409221220671"
    "2567698723427940708857070474293173329188523896721971353924492426178641188637790962814486917869468177"
    "5917171506691114800207594320120619696377951032270890295660855622254526026104607361313688690092817210"
    "6819861855378098201847115416363032626569928342415502360097804641710852553761272890533504550613568414"
    "3775854429677977014660294387687225115363801191758154028120818255606485410787933598921064427244898618"
    "9616294134180012951306836386092941000831366733721530083526962357371753307386533382048421903081864491"
    "8409372394403340524490955455801640646076158101030176748847501766190869294609876920169120218168829104"
    "0870709560951470416921147027413390052253340834812870353031023919699978597413908593605433599697075604"
    "4601342424536824960987725813110247327985620721265724990034682938868723048955622532044636026398542252"
    "5841646432427161141981780248259556354490721922658386366266375083594431487763515614571074552801615967"
    "7048442714194435183275698407552677926411261765250615965235457187956673170913319358761628255920783080"
    "1852068901515047133403861003100559148178521103847545429333891884441205179439699701941126951195265649"
    "1959418997541839323464742429070271887522353439367363366320030723274703740712398256202466265197409019"
    "9762452056198557625760008708173083288344381831070054514493545885422678578551915372292379555494333410"
    "1744201696000906964156127322977702212179518683763590822551288164700219923488640439591530184640047143"
    "2118636062252701154112228380277853891109849020134274101412155976996543887719748537643115822983853312"
    "3071751132961904559007938064276695819014842627991221792947987348901868471676503827328552059082984529"
    "8062592503521284519259279865935061329619467962523739725655841578537445675589980324054921869628884903"
    "3256085145534439166022625777551291620077279685262938793753045418108072928589198971538179734349618723"
    "2927614747850192611450413274873242970583408471112333746274617274626582415324271059322506255302314738"
    "7592517247873228814914559156050363345754242337791603749525024930223514819613811625639114156103268449"
    "5807250827343176594405409826976526934457986347970974312449827193311386387315963636121862349726140955"
    "6079920628316999420072054811525353393946076850019909886553861433495781650089961649079678142901148387"
    "6456821749140756237676184537751440314754112067601607264605568592577993220703373333989163695043466906"
    "9482843662998003741452762771654762382554617088318981086880684785370553648046935095881802536052974079"
    "3538676511195079373282083146268960071075175520614433784114549950136432446328193346389050936545714506"
    "9008644834401804283633905135781572739733345372842633721740657757710798305175557210367959769018899584"
    "9413019599957301790124019390868135658553966194137179448763207986880037160730322054742357226689680188"
    "2123424391885984168972277652194032493227314793669234004848976059037958094696041754279613782553781223"
    "9476461478329269765451622902817011004378460387565441517394339600489153188175766505009516974024156447"
    "7129365661425394936888423051740012992055685428985389794266995677702708914651373689220610441548166215"
    "6804219838476730871787590279209175900695273456682026513373111518000181434120962601658629821076663523"
    "3617740078377834237091526440630540718078433580610729611055500204151316963730468492133568372654003075"
    "0982908936461204789111475303704989395283345782408281738644132271000296831194020332345642082647327623"
    "3830294639378998375836554559919340866235090967961134004867027123176526663710778725111860354037554487"
    "4186935197336566217723592293967764632515620234875701137957120962377234313702120310049651521119760131"
    "7641940820343734851285260291333491512508311980285017785571072537314913921570910513096505988599993156"
    "0863655477403551898166733535880048214665099741433761182777723351910741217572841592580872591315074606"
    "0256349037772633739144613770380213183474473011130326702969173350477016321066162278300272692833655840"
    "1179141944780874825336071440329625228577500980859960904093631263562132816207145340610422411208301000"
    "8587264252112262480142647519426184325853386753874054743491072710049754281159466017136122590440158991"
    "6002298278017960351940800465135347526987776095278399843680869089891978396935321799801391354425527179"
    "1022539701081063214304851137829149851138196914304349750018998068164441212327332830719282436240673319"
    "6554692677851193152775113446468905504248113361434984604849051258345683266441528489713972376040328212"
    "6602535166939140820499473204860216277597917712347510975024030789357599377150950217516935558270725339"
    "1189233407022383207758580213717477837877839101523413209848942345961369234049799827930414446316270721"
    "4796117456975719681239291913740982925805561955207434243295982898980529233366415419256367380689494201"
    "4712413405250722040617943552525552250087487900865683145428351677505422948032747830440564385815919526"
    "6675828292970522612762871104013480178722480178968405240792436058274246744307672164527031345135416764"
    "9668901274786801010295133862698649748212118629040337691568576240699296372493097201628707200189835423"
    "6903641492702369619385473724803298550451120891928798298744678641291594175316756025334353106267452545"
    "0711418148323988060729714023472552071349079839898235526872395090936566787899238371257897624875599044"
    "3228895388377317348941122757071410959790047919301046740750411435381782464630795989555638991884773781"
    "3413470702467473621120489862269918885174562517325193413520381158633501239130544419100736284475675141"
    "6105041097350585276204448919097890198431548528053398577784431393388399431044446566924455088594631408"
    "1751220331390681596592510546858013133838152176418210433429788826119630443111388796258746090226130900"
    "8499754303957712432306169062629194039214397402708947776637024881554993224588259790206312574369109463"
    "9325280624164247686849545532493801763937161563684785982371590238542126584061536722860713170267474013"
    "1145261063765383390315921943469817605358380310612887852051546933639241088467632009567089718367490578"
    "1630851581381619668822220475704375906143380407258538620835651769984267745231958241826836982701602374"
    "1493836349662935157685406139734274647089968561817016055110488097155485911861718966802597354170542398"
    "5135560018720335079060946421271143993196046527424050882225359773481519135438571253258540493946010865"
    "7937980586201433660788252197178090258173708709164604527279771535099103407364250203863867182205228796"
    "9445838765294795104866071739022932745542678566977686593992341683412227466301506215532050265534146099"
    "5249356050854921756549134830958906536175693817637473644183378974229700703545206663170929607591989627"
    "7324230902523974438610142630986877339138825186843165010279649114977375828889134503411488659486702154"
    "9210108432808078342808941729800898329753694064496990312539986391958160146899522088066228540841486427"
    "4786281975546629278814621607171381880180840572084715868906836919393381864278454537956719272397972364"
    "6516675920110579956639625985355127635587681402134098290162968734298507924718460568748283313812591619"
    "6247615690287590107273310329914062386460833337863825792630239159000355760903247728133888733917809696"
    "6601469615031754226751125993315529674213336300222964906480934582008181061802100227664580400278213336"
    "7585730190113717546727630590443531313190360924890972464279284555499134900051802957070829190525567818"
    "8991389962513866231938005361134622429461024895407240485712325662888893172211643294781619055486805494"
    "3441034090680716088028227959686950133643814268252170472870863010137301155236861416908375675747637239"
    "7631857570381094433905645644685241830281481079983769185121272019350440418046047216269394457883770901"
    "0597469321972055811407877598977207200968938224930323683051586265728111463799698313751793762321511125"
    "2349734305240622105244234353732905655163406669506165892878218707756794176080712973781335187117931650"
    "0331555238224877306534441794534153952024244497034101208740721881093882681675120422994049481794494727"
    "3289477011157413944122845552182842492224065875268917227278060711675404697300803703961878779669488255"
    "5614674384392570115829546661358678671897661297311267200072971553613027503556167817765442287442114729"
    "8816148027052438068176535732755786025058470840132088379328160087690813004924914736825170353822196190"
    "3901499952349538710599735114347829233949918793660869230137559636853237380670359114424326856151210940"
    "4259582639301678017128669239283231057658851714020211196957064799814031505633045141564414623163763809"
    "9044028162569175764891425697141635984393174332702378123369380430128926263753826677950341693343236075"
    "0024817574180875038847509493945489620974048544263563716499594992098088429479036366629752600324385635"
    "2945844728944547166209297495496616877414120882130477022816116456044007236351581149729739218966737382"
    "6472047226422212420165601502849713063327958143025160136948255670147809357908896571349261581613469018"
    "0696508955631012121849180584792272069187169631633004485802010286065785859126997463766174146393415956"
    "9539554203314628026518951167938074573315759846086173702687867602943677780500244673391332431669880354"
    "0732323882818475010516413311895370364884226902704780527424906034920829547550540034571601840725745369"
    "3814553117535421072655783561549987444748042732345788006187314934156604635297977945507535930479568720"
    "9316724536547208381685855606043801977030764246083489876101345709394877002946175792061952549255757109"
    "0385251714885252656710453498134198033906415298763436954202560802776144219143189213939088345431317696"
    "8510184010384447234894886952098194353190650655535461733581404554483788475252625394966586999205841765"
    "2780125341033896469818642430034146791380619028059607854888010789705516946215228773090104467462497979"
    "9926271209516847795684825833414022664772108433624375937416105367340419547389641978954253350363018614"
    "0095153476696147625565187382329246854735693580289601153679178730355315937836308224861517777054157757"
    "6561759358512016692943111138863582159667618830326104164651714846979385422621687161400122378213779774"
    "1312689772667129920259220174087700769562834739322010881593562862819285635718933849588506038531581797"
    "6067947984087836097596014973342057270460352179060564760328556927627349518220323614411258418242624771"
    "2012035776388895974318232827871314608053533574494297621796789034568169889553518504478325616380709476"
    "9516990862471000197488092050095219436323787197648703392238115403634754886268459561597551937654101150"
    "1406700122692747439388858994385973024541480106123590803627458528849356325158538438324249325266608758"
    "8908318700709100237377106576985056433928854337658342596750653715005333514489908293887737352051459333"
    "0496265314151413861244379358850709446880454869753581702129084907873478068143663233228194158273456713"
    "5644317153796781805819585246484008403290998194378171817730231700398973305049538735611626102399943325"
    "9780126893432605584710278764901070923443884634011735556865903585244919370181041626208504299258697435"
    "8170981338940459344719374938776242324098528327622666049423851297094532455862521036008292866497241749"
    "1914198896612955807677097959479530601311915901177394310420904907942444886851308684449370590902600612"
    "0649425744710353547657859242708130410618546219881830090634588187038755856274911587375421064667951346"
    "4875867715438380185213482819158124625993351601989355951679689328522058247994210345127158771633452229"
    "9541883968044883552975336128683722593539007920166694133909116875880398882886921600237325736158820716"
    "3516271332810518187602104852180675526648673908900907195138058626735124312215691637902277328705410842"
    "0378415256832887180469879525130732663402785190594173389203585403956770356113293544825856282876106106"
    "9822972142096199350933131217118789107876687204454887608941017479864713788246215395593333327556200943"
    "9580434537919782280590395959927436913793778664940964048777841748336432684026282932406260081908081804"
    "3909145563519368560630450891422896452199877988493474777291327972660276584016678901364905087411421268"
    "6196986204412696528298108704547986155954533802120115564697997678573892018624359932677768945406050821"
    "8838227909833627167124490026761178498264377033002081844590009717235204331994708242098771514449751017"
    "0556430295428218196700092025156158441742059336581481349026931115170938722600264586305613256057925609"
    "2733226557934628080568344392137368840565043430739657406101777937014142461549307074136080544210029560"
    "0095663588977899267630517718781943706761498217564186590116160865408635391513039201316805769034172596"
    "4536923508064174465623515239290504094799531840748621512105618338545661766526063937136588025216662235"
    "7613220194170137266496607325201077194793126528276330241380516490717456596485374835466919452358031530"
    "1969160480994606814904037819829732360930087135760798621425422096419004367905479049930078372421581954"
    "5354183711293686584305538427176280352791288211293083515756565999447417884383815651484342298587042455"
    "9243469329523282180350833372628379183021659183618155421715744846577842013432998259456688455826617197"
    "9012180849480332448787258183774805522268151011371745368417870280274452442905474518234674919564188551"
    "2444213377835214238659799259882032870851093383868299065719946149062902574276860388505110326385445404"
    "1918495886653854504057132362968106914681484786965916686184275679846004186876229805556296304595322792"
    "3051616721591968675849523635298935788507746081537321454642984792310511676357749494622952569497660359"
    "4739624309953433104049942096778838270027144784940690370732491064441516960532565605867787574174721108"
    "2743577431519406075798356362914332639781221894628744779811980722564671466405485013100965678631488009"
    "0303749338875364183165134982546694673316118123364854397649325026179549357204305402182974871251107404"
    "0116114058999110930624923128131163405492625713567218186289327861388337180285350565035919527414008695"
    "1092616754147679266803210923746708721360627833292238641361959412133927803611827632410600474097111104"
    "8140003623342714514483334641675466354699731494756643423659493496845884551524150756376605086632827424"
    "7941360628760412906449138285194564026431532258586240431418386695906332450630003922131926476259626915"
    "1090445769530144405461803785750303668621246227863975274666787012100339298487337501447560032210062235"
    "8029343774955032037012738468163061026570300872275462966796880890587127676361066225722352229739206443"
    "0935243272281008599730951325286306011054979156447918450046180467624089289256809129305929606423570210"
    "6152464620502324896659398732493396737695202399176089847457184353193664652912584806448019652016283879"
    "5189499336759241485626136995945307287254532463291529110128763770605570609531377527751867923292134955"
    "2451330898679691651290738413021675732386375758200803635757280027544903279530799007994425411087256931"
    "8801466793559583467643286887696661009739574996783659339784634695994895061049038364740950469522606385"
    "8046758073069912290474089879166872117147527644711604401952718169508289733537148530928937046384420893"
    "2997711258568408466083399340456890267875160087754612679880154658565220612109534907967073655397025761"
    "9943137663996060606110640695933082817187642604357342536175694378484849525010826648839515970049059838"
    "0812105221111091943323951136051446459834210799058082093716464523127704023160072138543723461267260997"
    "8703856570919985075956346132484601884098501942876879022687345565005191215465440638292538512763176639"
    "2205093834520430077301702994036261543400132276391091298832786392041230044555168405488980908077917463"
    "6092439334912641164240093880746356607262336695842764583698268734815881961058571835767462009650526065"
    "9292635482914990457683072108932458570737016607173981944850288426039636607460311847862258310565808708"
    "7030556759586134170074540296568763477417643105175103673286924555858208237203860178173940517513043799"
    "4868822320044378043103170921034261674998000073016094814586374488778522273076330495383944345382770608"
    "7607635420984450083062476302535727810327834617669705442871553153400164970766571959850417481990872014"
    "9087568603778359199471934335277294728553792578768483230110185936580071729118696761765505377503029303"
    "3830706448912811412025506150896411007623824574488655182581058140345320124754723269087547507078577659"
    "7325428444593530449920700145387489482265564422236963655441942254413382122254774975354946248276805333"
    "3698328415613869236344335855386847111143049824839899180316545863828935379913053522283343013795337295"
    "4016257623228081138499491876144141322933767106563492528814528239506209022357876684650116660097382753"
    "6604054469416534222390521083145858470355293522199282727605748212660652913855303455497445514703449394"
    "8686342945965843102419078592368022456076393678416627051855517870290407355730462063969245330779578224"
    "5949710420188043000183881429008173039450507342787013124466860092778581811040911511729374873627887874"
    "9074652855654347488868310641100510230208751077689187815256227352515503795324448577872776170019648537"
    "0355516765520911933934376286628461984402629525218367852236747510880978150709897841308624588152266096"
    "3551401874495836926917799047120726494905737264286005211403581231076006699518536124862746756375896225"
    "2991164960668765082617341784847893372950567390078786179253514406210453662506404637288156982323175005"
    "9626108092195521115085930295565496753886261297233991462835847604862762702730973920200143224870758233"
    "7354915246085608210328882974183906478869923273691360048837436615223517058437705545210815513361262142"
    "9118156153017588825735948925071088792621286413924433093837973338678061317952373152667738208580247014"
    "3352700924380326695174211950767088432634644274912755890774686358216216604274131517021245858605623363"
    "1493164646913946562497471741958354218607748711057338458433689939645913740603382159352243594751626239"
    "1886853078228217639832373061802042465604775279431047961897242995330297924974816840528937910449470045"
    "9086499187272734541350810198388186467360939257193051196864560185578245021823106588943798652243205067"
    "7379966196955472440585922417953006820451795370043472451762893566770508490213107736625751697335527462"
    "3029430312035962609534235743972496592110106578178261087453188748031874308235736991951563409571627009"
    "9244492974910548985151965866474014822510633536794973714251022934188258511737199449911509758374613010"
    "5505064197721531929354875371191630262030328588658528480193509225875775597425276584011721342323648084"
    "0271433563675420463751825525249443296570438613878659019657388028684018940876728167141370336617326501"
    "2057865391578070308871426151907500149257611292767519309672845397116021360630309054224396632067432358"
    "2797889332324405779199278484633339777737655901870574806828678347965624146102899508487399692970750432"
    "7530299728722973279344429886464127253481606037797072982991730292963086958019963124133049393504933254"
    "1235507105446118259114111645453471032988104784406778013807713146540009938630648126661433085820681139"
    "5838319169545558259426895769841428893743467084107946318932539106963955780706021245974898293564613560"
    "7889834724199794785643620420946134123876131988653523583129968622689486084084566556068769545012744866"
    "3140505473535174687300980632278046891224682146080672762770840240226615548502400895289165711761743902"
    "0337584877842911289623247059191874691042005848326140677333751027195653994697162517248312230633919328"
    "7079838007484857265161234349332733566644733585564302352808839243482787608861649432893991663992104883"
    "0784777704804572849145630335326507002958890626591549850940797276756712979501009822947622896189159144"
    "1520032283878773485130979081019129267227103778898053964156362364169154985768408398468861684375407065"
    "1210390625061281076637990479088796747780697384731704752534421563903872012388063236880370179493089549"
    "0077633152306354837425681665336160664198003018828712376748189833024683637148830925928337590227894258"
    "8060087286038859168849730693948020511221766359138251524278670094406942355120201568377778851824670025"
    "6517085092496237477268136942843500629388144299879053010562173754591826799732177350293689280652100253"
    "9626880749809264345801165571588670044350397650532347828732736884086354000274067678382196352222653929"
    "0939807367391364082898722017776747168118195856133721583119054682936083236976113450281757830202934845"
    "9829250008956826302712632958662921476531422333517930933879513570953463771836840924444220963193312956"
    "2030557551734006797374061416210792363342380564685009203716715264255637185388957141641977238742261059"
    "6667396997173168169415435095283193556417705668622215217991151355639707143312893657553844648326201206"
    "4243380169558626985610224606460693307938478588143674070005997697036490192733288261353293631124036506"
    "9865216063898725026723808740339674439783025829689425689674186433613497947524552629142652284241924308"
    "3388103580053787023999542172113686550275341362211693140694669513186928102574795985605145005021715913"
    "3177516099578655519818861932112821107094422872404424811534060558959583558152320121846058205635926993"
    "0347885113206862662758877144603599665610843072569650056306448918759946659677284717153957361210818084"
    "1547273142661748933134174632662354222072600146012701206934639520564445543291662986660783089068118790"
    "0908152950636267820756143888157813511346953663038784120923469428687308393204323338727754968052103028"
    "2154432472338884521534372725012858974769146080831440412586818154004918777228786980185345453700652665"
    "5649170915429522756709222217474112062720656622989806032891672068743654948246108697367225547404812889"
    "2424718543236057534116728507575520571311566979545848873987422281358879858407831350605482905514827852"
    "9489112190538319562422871948475940785939804790109419407067176443903273071213588738504999363883820550"
    "1683402777496070276844880281912220636888636811043569529300652195528261526991271637277388418993287130"
    "5634646882273982887631986457098363089177864870866761854856800476725526754147428510281458074031529921"
    "9781455775684368111018531749816701642664788409026268282444825802753209454991510451851771654631180490"
    "4567985713257528117913656278158111288816562285876030875974963849435275676612168959261485030785362045"
    "2745077529506310124803418045840594329260798544356200937080918215239203717906781219922804960697382387"
    "4331262673030679594396095495718957721791559730058869364684557667609245090608820221223571925453671519"
    "1834872587423919410890444115959932760044506556206461164655665487594247369252336955993030355095817626"
    "1762318495619064948396730020377638743693439998294302091470736189479326927624451865602395590537051289"
    "7816345542332011497599489627842432748378803270141867695262118097500640514975588965029300486760520801"
    "0491537885413909424531691719987628941277221129464568294860281493181560249677887949813777216229359437"
    "8110044480607976724292762495107841534464291508427645200020427694706980417758322090970202916573472515"
    "8290463091035903784297757265172087724474095226716630600546971638794317119687348468873818665675127929"
    "8575016363411314627530499019135646823804329970695770150789337728658035712790913767420805655493624646"
;

}  // namespace

std::string_view pi_digit_table() {
  return {kPiDigits, sizeof(kPiDigits) - 1};
}

}  // namespace rmm
